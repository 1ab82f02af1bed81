//! HTTP front end for interactive scanning sessions.
//!
//! | method | path | |
//! |---|---|---|
//! | POST | `/sessions` | upload an image (raw body or multipart), scan it |
//! | GET | `/sessions/{id}/image?mode=thresh\|gray\|color` | current image as PNG |
//! | POST | `/sessions/{id}/crop` | `{"points":[{"x":..,"y":..} x4]}` |
//! | POST | `/sessions/{id}/rotate` | `{"dir":"left"\|"right"}` |
//! | POST | `/sessions/{id}/save` | write `Scanned.jpg` into the save directory |
//! | DELETE | `/sessions/{id}` | drop the session |

mod error;
pub mod session;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{
    DefaultBodyLimit, FromRequest, Multipart, Path as UrlPath, Query, Request, State,
};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{delete, get, post};
use axum::{Json, Router};
use docscan_core::codec::{decode_bytes, encode_bytes, ImageFormat};
use docscan_core::pipeline::scan;
use docscan_core::{AnyRaster, PipelineConfig, Point2F, ScanMode};
use serde::Deserialize;
use serde_json::json;
use tokio::sync::OwnedMutexGuard;
use tower_http::cors::{AllowOrigin, CorsLayer};
use tower_http::services::ServeDir;

pub use error::ApiError;
use session::{Direction, Edit, ScanSession, SessionStore};

pub const DEFAULT_PORT: u16 = 8350;
pub const SAVE_STEM: &str = "Scanned";

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Directory that `save` writes into.
    pub save_dir: PathBuf,
    /// Built UI bundle served at `/`, if present.
    pub static_dir: Option<PathBuf>,
    pub capacity: usize,
    pub pipeline: PipelineConfig,
    pub max_upload_bytes: usize,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            save_dir: PathBuf::from("."),
            static_dir: None,
            capacity: session::DEFAULT_CAPACITY,
            pipeline: PipelineConfig::default(),
            max_upload_bytes: 64 << 20,
        }
    }
}

struct AppState {
    store: SessionStore,
    config: ServiceConfig,
}

type Shared = Arc<AppState>;

pub fn router(config: ServiceConfig) -> Router {
    let limit = DefaultBodyLimit::max(config.max_upload_bytes);
    let static_dir = config.static_dir.clone().filter(|d| d.is_dir());
    let state = Arc::new(AppState {
        store: SessionStore::new(config.capacity),
        config,
    });
    let mut app = Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", delete(delete_session))
        .route("/sessions/{id}/image", get(get_image))
        .route("/sessions/{id}/crop", post(crop))
        .route("/sessions/{id}/rotate", post(rotate))
        .route("/sessions/{id}/save", post(save));
    if let Some(dir) = static_dir {
        app = app.fallback_service(ServeDir::new(dir));
    }
    app.layer(limit).layer(cors()).with_state(state)
}

/// Serves [`router`] on `listener` until the task is dropped.
pub async fn serve(
    listener: tokio::net::TcpListener,
    config: ServiceConfig,
) -> std::io::Result<()> {
    if let Ok(addr) = listener.local_addr() {
        log::info!("listening on http://{addr}");
    }
    axum::serve(listener, router(config)).await
}

fn cors() -> CorsLayer {
    CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|origin, _| is_local_origin(origin)))
        .allow_methods([Method::GET, Method::POST, Method::DELETE])
        .allow_headers([header::CONTENT_TYPE])
}

fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(origin) = origin.to_str() else {
        return false;
    };
    let Some(rest) = origin
        .strip_prefix("http://")
        .or_else(|| origin.strip_prefix("https://"))
    else {
        return false;
    };
    let host = match rest.strip_prefix('[') {
        Some(v6) => v6.split(']').next().unwrap_or(""),
        None => rest.split(':').next().unwrap_or(""),
    };
    matches!(host, "localhost" | "127.0.0.1" | "::1")
}

async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> T + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::internal(e.to_string()))
}

async fn locked(state: &AppState, id: &str) -> Result<OwnedMutexGuard<ScanSession>, ApiError> {
    let session = state.store.get(id).ok_or_else(|| ApiError::not_found(id))?;
    Ok(session.lock_owned().await)
}

fn png(img: &AnyRaster) -> Result<Response, ApiError> {
    let bytes = encode_bytes(img, ImageFormat::Png)?;
    Ok(([(header::CONTENT_TYPE, "image/png")], bytes).into_response())
}

/// Body bytes of a raw upload, or of the first non-empty multipart field.
async fn upload_bytes(req: Request) -> Result<Bytes, ApiError> {
    let is_multipart = req
        .headers()
        .get(header::CONTENT_TYPE)
        .and_then(|v| v.to_str().ok())
        .is_some_and(|v| v.starts_with("multipart/form-data"));
    if !is_multipart {
        return Bytes::from_request(req, &())
            .await
            .map_err(|e| ApiError::new(e.status(), "bad_request", e.body_text()));
    }
    let mut form = Multipart::from_request(req, &())
        .await
        .map_err(|e| ApiError::bad_request(e.body_text()))?;
    while let Some(field) = form
        .next_field()
        .await
        .map_err(|e| ApiError::bad_request(e.body_text()))?
    {
        let data = field
            .bytes()
            .await
            .map_err(|e| ApiError::bad_request(e.body_text()))?;
        if !data.is_empty() {
            return Ok(data);
        }
    }
    Err(ApiError::bad_request("multipart upload has no file"))
}

async fn create_session(State(state): State<Shared>, req: Request) -> Result<Response, ApiError> {
    let bytes = upload_bytes(req).await?;
    if bytes.is_empty() {
        return Err(ApiError::bad_request("empty upload"));
    }
    let cfg = state.config.pipeline.clone();
    let result = blocking(move || {
        let img = decode_bytes(&bytes)?;
        scan(&img, &cfg)
    })
    .await??;

    let id = uuid::Uuid::new_v4().simple().to_string();
    let quad = result.detected_quad;
    let (w, h) = result.dimensions();
    state.store.insert(ScanSession::new(id.clone(), result));
    log::info!("session {id}: {w}x{h} scan");
    let body = json!({ "id": id, "detected_quad": quad, "width": w, "height": h });
    Ok((StatusCode::CREATED, Json(body)).into_response())
}

#[derive(Deserialize)]
struct ImageQuery {
    mode: Option<String>,
}

async fn get_image(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
    Query(q): Query<ImageQuery>,
) -> Result<Response, ApiError> {
    let mut session = locked(&state, &id).await?;
    let mode = match q.mode {
        Some(m) => m
            .parse::<ScanMode>()
            .map_err(|e| ApiError::bad_request(e.to_string()))?,
        None => session.mode,
    };
    blocking(move || {
        session.set_mode(mode)?;
        png(&session.current)
    })
    .await?
}

fn parse_json<T: for<'de> Deserialize<'de>>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body)
        .map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

#[derive(Deserialize)]
struct CropBody {
    points: Vec<Point2F>,
}

async fn crop(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let mut session = locked(&state, &id).await?;
    let CropBody { points } = parse_json(&body)?;
    let points: [Point2F; 4] = points.as_slice().try_into().map_err(|_| {
        ApiError::bad_request(format!("crop needs exactly 4 points, got {}", points.len()))
    })?;
    blocking(move || {
        session.edit(Edit::Crop(points))?;
        png(&session.current)
    })
    .await?
}

#[derive(Deserialize)]
struct RotateBody {
    dir: Direction,
}

async fn rotate(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let mut session = locked(&state, &id).await?;
    let RotateBody { dir } = parse_json(&body)?;
    blocking(move || {
        session.edit(Edit::Rotate(dir))?;
        png(&session.current)
    })
    .await?
}

/// Creates `Scanned.jpg`, or the first free `Scanned-N.jpg`, in `dir`.
fn write_unique(dir: &Path, bytes: &[u8]) -> std::io::Result<PathBuf> {
    for n in 0u32.. {
        let name = match n {
            0 => format!("{SAVE_STEM}.jpg"),
            n => format!("{SAVE_STEM}-{n}.jpg"),
        };
        let path = dir.join(name);
        match std::fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
        {
            Ok(mut f) => {
                f.write_all(bytes)?;
                return Ok(path);
            }
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
            Err(e) => return Err(e),
        }
    }
    unreachable!("u32 range exhausted")
}

async fn save(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
) -> Result<Response, ApiError> {
    let session = locked(&state, &id).await?;
    let dir = state.config.save_dir.clone();
    let path = blocking(move || {
        let bytes = encode_bytes(&session.current, ImageFormat::Jpeg)?;
        write_unique(&dir, &bytes).map_err(|e| {
            ApiError::new(
                StatusCode::INSUFFICIENT_STORAGE,
                "save_failed",
                format!("cannot write to {}: {e}", dir.display()),
            )
        })
    })
    .await??;
    log::info!("session {id}: saved {}", path.display());
    Ok(Json(json!({ "path": path.display().to_string() })).into_response())
}

async fn delete_session(
    State(state): State<Shared>,
    UrlPath(id): UrlPath<String>,
) -> Result<StatusCode, ApiError> {
    state
        .store
        .remove(&id)
        .ok_or_else(|| ApiError::not_found(&id))?;
    Ok(StatusCode::NO_CONTENT)
}
