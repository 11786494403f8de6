fn main() {
    std::process::exit(presspose::cli::main_entry());
}
