//! Scan sessions and the bounded store that holds them.

use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex};

use docscan_core::pipeline::{fcpt_crop_any, render};
use docscan_core::{AnyRaster, Point2F, Result, Rotate, ScanMode, ScanResult};
use lru::LruCache;
use serde::Deserialize;

pub const DEFAULT_CAPACITY: usize = 32;

/// Rotation direction as named by the user-facing keys. `Right` turns the
/// image counter-clockwise and `Left` clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn apply(self, img: &AnyRaster) -> AnyRaster {
        match self {
            Direction::Right => img.rotate_ccw(),
            Direction::Left => img.rotate_cw(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edit {
    Crop([Point2F; 4]),
    Rotate(Direction),
}

impl Edit {
    pub fn apply(&self, img: &AnyRaster) -> Result<AnyRaster> {
        match self {
            Edit::Crop(points) => fcpt_crop_any(img, points),
            Edit::Rotate(dir) => Ok(dir.apply(img)),
        }
    }
}

/// Replays `log` over the rendering of `result` in `mode`.
pub fn replay(result: &ScanResult, mode: ScanMode, log: &[Edit]) -> Result<AnyRaster> {
    log.iter()
        .try_fold(render(result, mode), |img, e| e.apply(&img))
}

#[derive(Debug)]
pub struct ScanSession {
    pub id: String,
    pub result: ScanResult,
    pub mode: ScanMode,
    pub edit_log: Vec<Edit>,
    /// The edit log replayed over the current mode's rendering.
    pub current: AnyRaster,
}

impl ScanSession {
    pub fn new(id: String, result: ScanResult) -> Self {
        let mode = ScanMode::default();
        let current = render(&result, mode);
        ScanSession {
            id,
            result,
            mode,
            edit_log: Vec::new(),
            current,
        }
    }

    /// Switches the rendered mode, keeping every edit.
    pub fn set_mode(&mut self, mode: ScanMode) -> Result<()> {
        if mode != self.mode {
            self.current = replay(&self.result, mode, &self.edit_log)?;
            self.mode = mode;
        }
        Ok(())
    }

    /// Applies `edit` to the current image; the log is untouched on failure.
    pub fn edit(&mut self, edit: Edit) -> Result<()> {
        self.current = edit.apply(&self.current)?;
        self.edit_log.push(edit);
        Ok(())
    }
}

pub type SharedSession = Arc<tokio::sync::Mutex<ScanSession>>;

/// Sessions by id, evicting the least recently used beyond `capacity`.
pub struct SessionStore {
    map: Mutex<LruCache<String, SharedSession>>,
}

impl SessionStore {
    pub fn new(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity).unwrap_or(NonZeroUsize::MIN);
        SessionStore {
            map: Mutex::new(LruCache::new(cap)),
        }
    }

    pub fn insert(&self, session: ScanSession) -> SharedSession {
        let id = session.id.clone();
        let shared = Arc::new(tokio::sync::Mutex::new(session));
        // ids are fresh, so a returned entry is always an eviction
        if let Some((old, _)) = self.lock().push(id, shared.clone()) {
            log::info!("evicted session {old}");
        }
        shared
    }

    pub fn get(&self, id: &str) -> Option<SharedSession> {
        self.lock().get(id).cloned()
    }

    pub fn remove(&self, id: &str) -> Option<SharedSession> {
        self.lock().pop(id)
    }

    pub fn len(&self) -> usize {
        self.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, LruCache<String, SharedSession>> {
        self.map.lock().unwrap_or_else(|e| e.into_inner())
    }
}
