//! HTTP API over recordings, annotations, propagation and inference.
//!
//! Keypoint coordinates are working-resolution pixels everywhere. The store
//! is an immutable snapshot behind a lock: writers build a new store and swap
//! it in whole, so readers never observe a partial update. A recording has at
//! most one writer at a time; a second concurrent writer gets 409.
//!
//! Sequence ids are `"{subject}-{posture}"`.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use crate::adapter::{load_adapter, AdapterKind, PoseModule};
use crate::annotation::{self, AnnotationRecord, AnnotationStore, FrameRef, Keypoint, KeypointSet, RecordJson};
use crate::checkpoint::load_polishnet;
use crate::colormap::ColormapRegistry;
use crate::dataset::{discover_sequences, sequence_id, STORE_FILE};
use crate::error::Error;
use crate::evaluation::{suggest, Polish, Suggestion};
use crate::polishnet::PolishNetParams;
use crate::pressure::{colorize, PressureFrame, PressureSequence, DEFAULT_WORKING_SIZE, FRAME_LEN};
use crate::skeleton::{PartName, SkeletonTopology};
use crate::targets::DEFAULT_PEAK_THRESHOLD;

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub data_dir: PathBuf,
    /// (width, height).
    pub working_size: (usize, usize),
    pub checkpoint: Option<PathBuf>,
    pub adapter: Option<AdapterKind>,
}

impl ServiceConfig {
    pub fn new(data_dir: impl Into<PathBuf>) -> Self {
        ServiceConfig {
            data_dir: data_dir.into(),
            working_size: DEFAULT_WORKING_SIZE,
            checkpoint: None,
            adapter: None,
        }
    }
}

pub struct Model {
    pub polish: Option<PolishNetParams>,
    pub adapter: Box<dyn PoseModule>,
}

impl Model {
    pub fn suggest(
        &self,
        frame: &PressureFrame,
        frame_ref: FrameRef,
        colormap: &crate::colormap::Colormap,
        size: (usize, usize),
    ) -> crate::Result<Suggestion> {
        let image = colorize(frame, colormap, size);
        let polish = self.polish.as_ref().map(|p| p as &dyn Polish);
        suggest(polish, self.adapter.as_ref(), &image, frame_ref, DEFAULT_PEAK_THRESHOLD)
    }
}

pub struct AppState {
    sequences: BTreeMap<String, PressureSequence>,
    store: RwLock<Arc<AnnotationStore>>,
    /// Serializes the read-modify-swap of the store across recordings.
    commit: Mutex<()>,
    writers: Mutex<HashSet<String>>,
    store_path: PathBuf,
    working_size: (usize, usize),
    colormaps: ColormapRegistry,
    model: Option<Model>,
}

/// Held for the duration of one write to a recording.
pub struct WriteGuard<'a> {
    state: &'a AppState,
    id: String,
}

impl Drop for WriteGuard<'_> {
    fn drop(&mut self) {
        self.state.writers.lock().expect("writer set poisoned").remove(&self.id);
    }
}

impl AppState {
    pub fn load(cfg: &ServiceConfig) -> crate::Result<Self> {
        let sequences = discover_sequences(&cfg.data_dir)?;
        let store_path = cfg.data_dir.join(STORE_FILE);
        let store = crate::dataset::load_store(&cfg.data_dir, cfg.working_size)?;
        let model = match (&cfg.adapter, &cfg.checkpoint) {
            (None, None) => None,
            (adapter, ckpt) => Some(Model {
                polish: ckpt.as_deref().map(load_polishnet).transpose()?,
                adapter: Box::new(load_adapter(
                    adapter.as_ref().unwrap_or(&AdapterKind::Mock { seed: 0 }),
                )?),
            }),
        };
        Ok(AppState {
            sequences,
            store: RwLock::new(Arc::new(store)),
            commit: Mutex::new(()),
            writers: Mutex::new(HashSet::new()),
            store_path,
            working_size: cfg.working_size,
            colormaps: ColormapRegistry::default(),
            model,
        })
    }

    pub fn with_model(mut self, model: Model) -> Self {
        self.model = Some(model);
        self
    }

    pub fn snapshot(&self) -> Arc<AnnotationStore> {
        self.store.read().expect("store lock poisoned").clone()
    }

    /// `None` when another write to the recording is in flight.
    pub fn try_begin_write(&self, id: &str) -> Option<WriteGuard<'_>> {
        let mut w = self.writers.lock().expect("writer set poisoned");
        w.insert(id.to_string()).then(|| WriteGuard {
            state: self,
            id: id.to_string(),
        })
    }

    /// Applies `op` to the current store, persists the result and swaps it in.
    /// On error nothing changes.
    fn commit(
        &self,
        op: impl FnOnce(&AnnotationStore) -> crate::Result<AnnotationStore>,
    ) -> crate::Result<Arc<AnnotationStore>> {
        let _g = self.commit.lock().expect("commit lock poisoned");
        let next = Arc::new(op(&self.snapshot())?);
        next.save(&self.store_path)?;
        *self.store.write().expect("store lock poisoned") = next.clone();
        Ok(next)
    }
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<String>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
    field: Option<String>,
}

impl ApiError {
    fn bad_request(field: impl Into<String>, message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            message: message.into(),
            field: Some(field.into()),
        }
    }

    fn not_found(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::NOT_FOUND,
            message: message.into(),
            field: None,
        }
    }

    fn conflict(id: &str) -> Self {
        ApiError {
            status: StatusCode::CONFLICT,
            message: format!("sequence {id} has a write in progress"),
            field: None,
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let (status, field) = match &e {
            Error::UnknownColormap(_) => (StatusCode::BAD_REQUEST, Some("colormap".to_string())),
            Error::NoSeedAnnotation { .. } => (StatusCode::BAD_REQUEST, Some("annotation".to_string())),
            Error::Validation(_) | Error::Parse(_) | Error::Json(_) => (StatusCode::BAD_REQUEST, None),
            _ => (StatusCode::INTERNAL_SERVER_ERROR, None),
        };
        ApiError {
            status,
            message: e.to_string(),
            field,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: self.message,
            field: self.field,
        };
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;
type Shared = Arc<AppState>;

pub fn router(state: Shared) -> Router {
    Router::new()
        .route("/sequences", get(list_sequences))
        .route("/sequences/{id}/frames/{t}/image", get(frame_image))
        .route(
            "/sequences/{id}/frames/{t}/annotation",
            get(get_annotation).post(post_annotation),
        )
        .route("/sequences/{id}/annotations", get(sequence_annotations))
        .route("/sequences/{id}/propagate", post(propagate))
        .route("/infer", post(infer))
        .route("/skeleton", get(skeleton))
        .with_state(state)
}

pub async fn serve(state: AppState, addr: std::net::SocketAddr) -> crate::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|e| Error::Config(format!("bind {addr}: {e}")))?;
    log::info!("listening on {addr}");
    axum::serve(listener, router(Arc::new(state)))
        .await
        .map_err(|e| Error::Config(format!("server: {e}")))
}

fn lookup<'a>(state: &'a AppState, id: &str) -> ApiResult<&'a PressureSequence> {
    state
        .sequences
        .get(id)
        .ok_or_else(|| ApiError::not_found(format!("unknown sequence {id}")))
}

fn lookup_frame<'a>(
    state: &'a AppState,
    id: &str,
    t: u32,
) -> ApiResult<(&'a PressureSequence, &'a PressureFrame, FrameRef)> {
    let seq = lookup(state, id)?;
    let frame = seq
        .frame_by_timestamp(t)
        .ok_or_else(|| ApiError::not_found(format!("sequence {id} has no frame {t}")))?;
    let meta = seq.meta();
    Ok((seq, frame, FrameRef::new(meta.subject_id, meta.posture_id, t)))
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SequenceSummary {
    pub id: String,
    pub subject_id: u32,
    pub posture_id: u32,
    pub sample_rate_hz: u32,
    pub timestamps: Vec<u32>,
    pub annotated: usize,
}

async fn list_sequences(State(state): State<Shared>) -> Json<Vec<SequenceSummary>> {
    let store = state.snapshot();
    Json(
        state
            .sequences
            .iter()
            .map(|(id, seq)| {
                let meta = seq.meta();
                SequenceSummary {
                    id: id.clone(),
                    subject_id: meta.subject_id,
                    posture_id: meta.posture_id,
                    sample_rate_hz: meta.sample_rate_hz,
                    timestamps: seq.frames().iter().map(|f| f.timestamp_index()).collect(),
                    annotated: store.sequence_records(meta.subject_id, meta.posture_id).count(),
                }
            })
            .collect(),
    )
}

#[derive(Debug, Deserialize)]
struct ImageQuery {
    colormap: Option<String>,
}

async fn frame_image(
    State(state): State<Shared>,
    UrlPath((id, t)): UrlPath<(String, u32)>,
    Query(q): Query<ImageQuery>,
) -> ApiResult<Response> {
    let (_, frame, _) = lookup_frame(&state, &id, t)?;
    let map = match &q.colormap {
        Some(name) => state.colormaps.get(name)?,
        None => state.colormaps.default_map(),
    };
    let png = colorize(frame, map, state.working_size).encode_png()?;
    Ok(([(header::CONTENT_TYPE, "image/png")], png).into_response())
}

async fn get_annotation(
    State(state): State<Shared>,
    UrlPath((id, t)): UrlPath<(String, u32)>,
) -> ApiResult<Json<RecordJson>> {
    let (_, _, frame) = lookup_frame(&state, &id, t)?;
    let store = state.snapshot();
    let rec = store
        .get(&frame)
        .ok_or_else(|| ApiError::not_found(format!("frame {t} of sequence {id} is not annotated")))?;
    Ok(Json(RecordJson::from(rec)))
}

/// A record in the file schema; `frame` and `provenance` may be omitted.
#[derive(Debug, Deserialize)]
pub struct AnnotationBody {
    #[serde(default)]
    pub frame: Option<FrameRef>,
    #[serde(default)]
    pub points: BTreeMap<String, [f64; 2]>,
    #[serde(default)]
    pub visible: BTreeMap<String, bool>,
}

fn keypoints_from_body(body: &AnnotationBody, frame: FrameRef, size: (usize, usize)) -> ApiResult<KeypointSet> {
    if let Some(f) = body.frame {
        if f != frame {
            return Err(ApiError::bad_request(
                "frame",
                format!("body frame {f:?} does not match the URL"),
            ));
        }
    }
    for name in body.points.keys().chain(body.visible.keys()) {
        if name.parse::<PartName>().is_err() {
            return Err(ApiError::bad_request(name, format!("unknown part {name}")));
        }
    }
    let mut ks = KeypointSet::all_hidden(frame);
    for part in PartName::ALL {
        let visible = body.visible.get(part.as_str()).copied().unwrap_or(false);
        let kp = match body.points.get(part.as_str()) {
            Some(&[x, y]) => Keypoint { x, y, visible },
            None if visible => {
                return Err(ApiError::bad_request(
                    part.as_str(),
                    format!("{part} is visible but has no point"),
                ))
            }
            None => Keypoint::hidden(),
        };
        ks.set(part, kp);
    }
    if let Some(part) = ks.out_of_bounds_part(size) {
        return Err(ApiError::bad_request(part.as_str(), format!("{part} out of bounds")));
    }
    Ok(ks)
}

async fn post_annotation(
    State(state): State<Shared>,
    UrlPath((id, t)): UrlPath<(String, u32)>,
    Json(body): Json<AnnotationBody>,
) -> ApiResult<Json<RecordJson>> {
    let (_, _, frame) = lookup_frame(&state, &id, t)?;
    let ks = keypoints_from_body(&body, frame, state.working_size)?;
    let _guard = state.try_begin_write(&id).ok_or_else(|| ApiError::conflict(&id))?;
    let store = state.commit(|s| annotation::put_annotation(s, ks))?;
    Ok(Json(RecordJson::from(store.get(&frame).expect("just written"))))
}

fn sequence_records(store: &AnnotationStore, seq: &PressureSequence) -> Vec<RecordJson> {
    let meta = seq.meta();
    store
        .sequence_records(meta.subject_id, meta.posture_id)
        .map(RecordJson::from)
        .collect()
}

async fn sequence_annotations(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<Json<Vec<RecordJson>>> {
    let seq = lookup(&state, &id)?;
    Ok(Json(sequence_records(&state.snapshot(), seq)))
}

async fn propagate(State(state): State<Shared>, UrlPath(id): UrlPath<String>) -> ApiResult<Json<Vec<RecordJson>>> {
    lookup(&state, &id)?;
    let worker = state.clone();
    tokio::task::spawn_blocking(move || {
        let seq = lookup(&worker, &id)?;
        let _guard = worker.try_begin_write(&id).ok_or_else(|| ApiError::conflict(&id))?;
        let store = worker.commit(|s| annotation::propagate(s, seq))?;
        Ok(Json(sequence_records(&store, seq)))
    })
    .await
    .map_err(|e| ApiError::from(Error::Config(format!("propagation task failed: {e}"))))?
}

/// Either a stored frame or raw row-major values of one 32x64 frame.
#[derive(Debug, Deserialize)]
pub struct InferBody {
    #[serde(default)]
    pub frame: Option<FrameRef>,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
    #[serde(default)]
    pub colormap: Option<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct InferResponse {
    pub frame: FrameRef,
    pub points: BTreeMap<String, [f64; 2]>,
    pub visible: BTreeMap<String, bool>,
    pub confidence: BTreeMap<String, f64>,
}

impl InferResponse {
    pub fn from_suggestion(s: &Suggestion) -> Self {
        let ks = &s.keypoints;
        InferResponse {
            frame: ks.frame,
            points: PartName::ALL
                .iter()
                .map(|&p| (p.to_string(), [ks.get(p).x, ks.get(p).y]))
                .collect(),
            visible: PartName::ALL
                .iter()
                .map(|&p| (p.to_string(), ks.get(p).visible))
                .collect(),
            confidence: PartName::ALL
                .iter()
                .map(|&p| (p.to_string(), s.confidence[p.index()]))
                .collect(),
        }
    }
}

async fn infer(State(state): State<Shared>, Json(body): Json<InferBody>) -> ApiResult<Json<InferResponse>> {
    if state.model.is_none() {
        return Err(ApiError {
            status: StatusCode::SERVICE_UNAVAILABLE,
            message: "no model loaded".into(),
            field: None,
        });
    }
    let (frame, frame_ref) = match (&body.frame, &body.values) {
        (Some(f), None) => {
            let id = sequence_id(f.subject_id, f.posture_id);
            let (_, frame, r) = lookup_frame(&state, &id, f.timestamp_index)?;
            (frame.clone(), r)
        }
        (None, Some(values)) => {
            if values.len() != FRAME_LEN {
                return Err(ApiError::bad_request(
                    "values",
                    format!("expected {FRAME_LEN} values, got {}", values.len()),
                ));
            }
            let frame =
                PressureFrame::new(values.clone(), 0).map_err(|e| ApiError::bad_request("values", e.to_string()))?;
            (frame, FrameRef::new(0, 0, 0))
        }
        _ => return Err(ApiError::bad_request("frame", "give exactly one of frame or values")),
    };
    let map = match &body.colormap {
        Some(name) => state.colormaps.get(name)?.clone(),
        None => state.colormaps.default_map().clone(),
    };
    let worker = state.clone();
    let s = tokio::task::spawn_blocking(move || {
        let model = worker.model.as_ref().expect("checked above");
        model.suggest(&frame, frame_ref, &map, worker.working_size)
    })
    .await
    .map_err(|e| ApiError::from(Error::Config(format!("inference task failed: {e}"))))??;
    Ok(Json(InferResponse::from_suggestion(&s)))
}

async fn skeleton() -> Json<SkeletonTopology> {
    Json(SkeletonTopology::default())
}

/// The record the service would return for `frame` after a manual POST.
pub fn manual_record(ks: KeypointSet) -> RecordJson {
    RecordJson::from(&AnnotationRecord {
        keypoints: ks,
        provenance: annotation::Provenance::Manual,
    })
}
