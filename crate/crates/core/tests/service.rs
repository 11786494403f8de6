use std::path::Path;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use presspose::adapter::{mock, MockSpec};
use presspose::annotation::{propagate, put_annotation, AnnotationStore, FrameRef, Keypoint, KeypointSet, Provenance};
use presspose::colormap::colormap_by_name;
use presspose::dataset::STORE_FILE;
use presspose::polishnet::{init_params, PolishNetConfig};
use presspose::pressure::{load_sequence, save_sequence, SequenceFormat};
use presspose::service::{router, AppState, InferResponse, Model, SequenceSummary, ServiceConfig};
use presspose::skeleton::PartName;
use presspose::synthetic::{synth_sequence, SyntheticConfig};

const SIZE: (usize, usize) = (32, 64);

fn write_fixture(dir: &Path) {
    for (s, p, n) in [(1, 1, 10), (2, 3, 4)] {
        let cfg = SyntheticConfig {
            frames_per_sequence: n,
            ..SyntheticConfig::default()
        };
        let seq = synth_sequence(s, p, &cfg, SIZE, 0).unwrap().sequence;
        save_sequence(&seq, &dir.join(format!("s{s}p{p}.txt")), SequenceFormat::Text).unwrap();
    }
}

fn model() -> Model {
    let cfg = PolishNetConfig {
        channel_widths: vec![4, 4, 4],
        working_size: SIZE,
        ..PolishNetConfig::default()
    };
    Model {
        polish: Some(init_params(&cfg, 0).unwrap()),
        adapter: Box::new(mock(&MockSpec::new(1)).unwrap()),
    }
}

fn config(dir: &Path) -> ServiceConfig {
    ServiceConfig {
        working_size: SIZE,
        ..ServiceConfig::new(dir)
    }
}

fn state(dir: &Path, with_model: bool) -> Arc<AppState> {
    let s = AppState::load(&config(dir)).unwrap();
    Arc::new(if with_model { s.with_model(model()) } else { s })
}

async fn call(state: &Arc<AppState>, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Vec<u8>) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(v) => req
            .header("content-type", "application/json")
            .body(Body::from(v.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = router(state.clone()).oneshot(req).await.unwrap();
    let status = resp.status();
    (status, resp.into_body().collect().await.unwrap().to_bytes().to_vec())
}

async fn call_json(state: &Arc<AppState>, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let (status, bytes) = call(state, method, uri, body).await;
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

fn full_pose(frame: FrameRef) -> KeypointSet {
    let mut ks = KeypointSet::all_hidden(frame);
    for p in PartName::ALL {
        let i = p.index() as f64;
        ks.set(p, Keypoint::visible(4.0 + 1.5 * i, 6.0 + 3.5 * i));
    }
    ks
}

fn body_of(ks: &KeypointSet) -> Value {
    let points: serde_json::Map<String, Value> = PartName::ALL
        .iter()
        .map(|&p| (p.to_string(), json!([ks.get(p).x, ks.get(p).y])))
        .collect();
    let visible: serde_json::Map<String, Value> = PartName::ALL
        .iter()
        .map(|&p| (p.to_string(), json!(ks.get(p).visible)))
        .collect();
    json!({ "points": points, "visible": visible })
}

fn records_json(store: &AnnotationStore, subject: u32, posture: u32) -> Value {
    let recs: Vec<_> = store
        .sequence_records(subject, posture)
        .map(presspose::annotation::RecordJson::from)
        .collect();
    serde_json::to_value(recs).unwrap()
}

#[tokio::test]
async fn lists_sequences_with_timestamps_and_counts() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let (status, body) = call_json(&st, "GET", "/sequences", None).await;
    assert_eq!(status, StatusCode::OK);
    let list: Vec<SequenceSummary> = serde_json::from_value(body).unwrap();
    let ids: Vec<&str> = list.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(ids, ["1-1", "2-3"]);
    assert_eq!(list[0].timestamps, (0..10).collect::<Vec<u32>>());
    assert_eq!(list[1].subject_id, 2);
    assert!(list.iter().all(|s| s.annotated == 0));
}

#[tokio::test]
async fn frame_image_is_a_png_at_working_size() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    for uri in [
        "/sequences/1-1/frames/3/image",
        "/sequences/1-1/frames/3/image?colormap=jet",
    ] {
        let (status, bytes) = call(&st, "GET", uri, None).await;
        assert_eq!(status, StatusCode::OK, "{uri}");
        let img = image::load_from_memory(&bytes).unwrap();
        assert_eq!((img.width() as usize, img.height() as usize), SIZE);
    }
    let (status, body) = call_json(&st, "GET", "/sequences/1-1/frames/3/image?colormap=nope", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["field"], "colormap");
}

#[tokio::test]
async fn unknown_sequence_or_frame_is_404() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    for (method, uri) in [
        ("GET", "/sequences/9-9/frames/0/image"),
        ("GET", "/sequences/1-1/frames/99/image"),
        ("GET", "/sequences/1-1/frames/0/annotation"),
        ("GET", "/sequences/9-9/annotations"),
        ("POST", "/sequences/9-9/propagate"),
    ] {
        assert_eq!(
            call(&st, method, uri, None).await.0,
            StatusCode::NOT_FOUND,
            "{method} {uri}"
        );
    }
}

#[tokio::test]
async fn bad_annotations_are_rejected_naming_the_part() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let uri = "/sequences/1-1/frames/0/annotation";
    let good = body_of(&full_pose(FrameRef::new(1, 1, 0)));

    let mut unknown = good.clone();
    unknown["points"]["tail"] = json!([1.0, 1.0]);
    let mut outside = good.clone();
    outside["points"]["r_knee"] = json!([SIZE.0 as f64, 3.0]);
    let mut pointless = good.clone();
    pointless["points"].as_object_mut().unwrap().remove("l_wrist");
    let mut wrong_frame = good.clone();
    wrong_frame["frame"] = json!([1, 1, 5]);

    for (body, field) in [
        (unknown, "tail"),
        (outside, "r_knee"),
        (pointless, "l_wrist"),
        (wrong_frame, "frame"),
    ] {
        let (status, err) = call_json(&st, "POST", uri, Some(body)).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{field}");
        assert_eq!(err["field"], field);
    }
    assert!(st.snapshot().is_empty());
    assert!(!dir.path().join(STORE_FILE).exists());
}

#[tokio::test]
async fn annotation_round_trips_and_persists() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let ks = full_pose(FrameRef::new(2, 3, 1));
    let (status, posted) = call_json(&st, "POST", "/sequences/2-3/frames/1/annotation", Some(body_of(&ks))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(posted["provenance"], "manual");
    let (status, fetched) = call_json(&st, "GET", "/sequences/2-3/frames/1/annotation", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(fetched, posted);
    assert_eq!(st.snapshot().get(&ks.frame).unwrap().keypoints, ks);

    let reloaded = state(dir.path(), false);
    assert_eq!(*reloaded.snapshot(), *st.snapshot());
}

#[tokio::test]
async fn second_writer_gets_409() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let uri = "/sequences/1-1/frames/0/annotation";
    let body = body_of(&full_pose(FrameRef::new(1, 1, 0)));
    let guard = st.try_begin_write("1-1").unwrap();
    assert_eq!(call(&st, "POST", uri, Some(body.clone())).await.0, StatusCode::CONFLICT);
    assert_eq!(
        call(&st, "POST", "/sequences/1-1/propagate", None).await.0,
        StatusCode::CONFLICT
    );
    // other recordings are unaffected
    let other = body_of(&full_pose(FrameRef::new(2, 3, 0)));
    assert_eq!(
        call(&st, "POST", "/sequences/2-3/frames/0/annotation", Some(other))
            .await
            .0,
        StatusCode::OK
    );
    drop(guard);
    assert_eq!(call(&st, "POST", uri, Some(body)).await.0, StatusCode::OK);
}

#[tokio::test]
async fn propagate_without_a_seed_is_400() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let (status, err) = call_json(&st, "POST", "/sequences/1-1/propagate", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(err["field"], "annotation");
}

#[tokio::test]
async fn infer_needs_a_model_and_a_whole_frame() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let bare = state(dir.path(), false);
    let req = json!({ "frame": [1, 1, 0] });
    assert_eq!(
        call(&bare, "POST", "/infer", Some(req.clone())).await.0,
        StatusCode::SERVICE_UNAVAILABLE
    );

    let st = state(dir.path(), true);
    let (status, err) = call_json(&st, "POST", "/infer", Some(json!({ "values": [1.0, 2.0] }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(err["field"], "values");
    let (status, err) = call_json(&st, "POST", "/infer", Some(json!({}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(err["field"], "frame");
    assert_eq!(
        call(&st, "POST", "/infer", Some(json!({ "frame": [1, 1, 77] })))
            .await
            .0,
        StatusCode::NOT_FOUND
    );

    let seq = load_sequence(&dir.path().join("s1p1.txt")).unwrap();
    let raw = seq.frames()[2].values().to_vec();
    let (status, by_values) = call_json(&st, "POST", "/infer", Some(json!({ "values": raw }))).await;
    assert_eq!(status, StatusCode::OK);
    let (_, by_frame) = call_json(&st, "POST", "/infer", Some(json!({ "frame": [1, 1, 2] }))).await;
    assert_eq!(by_values["points"], by_frame["points"]);
    assert_eq!(by_values["confidence"], by_frame["confidence"]);
}

#[tokio::test]
async fn skeleton_lists_parts_and_limbs() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), false);
    let (status, body) = call_json(&st, "GET", "/skeleton", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["parts"].as_array().unwrap().len(), 14);
    assert_eq!(body["limbs"].as_array().unwrap().len(), 14);
    assert_eq!(body["parts"][0], "head");
}

/// Place 14 keypoints on one frame, save, propagate the 10-frame recording,
/// and compare the server against the library and the suggestion layer.
#[tokio::test]
async fn annotation_end_to_end_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path());
    let st = state(dir.path(), true);
    let seq = load_sequence(&dir.path().join("s1p1.txt")).unwrap();
    let seed = full_pose(FrameRef::new(1, 1, 4));

    let (status, _) = call_json(&st, "POST", "/sequences/1-1/frames/4/annotation", Some(body_of(&seed))).await;
    assert_eq!(status, StatusCode::OK);
    let (status, propagated) = call_json(&st, "POST", "/sequences/1-1/propagate", None).await;
    assert_eq!(status, StatusCode::OK);

    let expected = propagate(&put_annotation(&AnnotationStore::new(SIZE), seed).unwrap(), &seq).unwrap();
    assert_eq!(*st.snapshot(), expected);
    assert_eq!(propagated, records_json(&expected, 1, 1));
    let (manual, copied): (Vec<_>, Vec<_>) = st
        .snapshot()
        .sequence_records(1, 1)
        .map(|r| r.provenance)
        .partition(|p| *p == Provenance::Manual);
    assert_eq!((manual.len(), copied.len()), (1, 9));
    let (_, listed) = call_json(&st, "GET", "/sequences/1-1/annotations", None).await;
    assert_eq!(listed, propagated);
    let on_disk = AnnotationStore::load(&dir.path().join(STORE_FILE), SIZE).unwrap();
    assert_eq!(on_disk, expected);

    let m = model();
    let viridis = colormap_by_name("viridis").unwrap();
    for t in [0u32, 4, 9] {
        let frame = seq.frame_by_timestamp(t).unwrap();
        let want = InferResponse::from_suggestion(&m.suggest(frame, FrameRef::new(1, 1, t), &viridis, SIZE).unwrap());
        let (status, got) = call_json(&st, "POST", "/infer", Some(json!({ "frame": [1, 1, t] }))).await;
        assert_eq!(status, StatusCode::OK);
        assert_eq!(serde_json::from_value::<InferResponse>(got).unwrap(), want);
    }
}
