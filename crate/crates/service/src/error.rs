use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use docscan_core::Error;
use serde_json::json;

/// An error response: status plus a `{"error": code, "message": ...}` body.
#[derive(Debug)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: &'static str,
    pub message: String,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            code,
            message: message.into(),
        }
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "bad_request", message)
    }

    pub fn not_found(id: &str) -> Self {
        Self::new(
            StatusCode::NOT_FOUND,
            "not_found",
            format!("no session {id}"),
        )
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", message)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::NoDocument => {
                Self::new(StatusCode::UNPROCESSABLE_ENTITY, "no_document", message)
            }
            Error::AmbiguousCorners(_) | Error::Geometry(_) => {
                Self::new(StatusCode::CONFLICT, "reclick_corners", message)
            }
            Error::InvalidArgument(_) | Error::DimensionMismatch { .. } | Error::Decode { .. } => {
                Self::bad_request(message)
            }
            Error::Io { .. } | Error::Encode { .. } => Self::internal(message),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        if self.status.is_server_error() {
            log::error!("{}: {}", self.code, self.message);
        }
        let body = Json(json!({ "error": self.code, "message": self.message }));
        (self.status, body).into_response()
    }
}
