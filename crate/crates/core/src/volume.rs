//! Dense 3D volume containers, hierarchical label semantics, volume
//! summation, and the on-disk volume format.
//!
//! Volumes are immutable after construction and safe to share across
//! threads. The on-disk format is a JSON header (`.vjson`) next to a raw
//! little-endian payload (`.vraw`), row-major with channel as the slowest
//! axis. Volumes are counted in voxels; physical mm³ is a presentation-layer
//! multiplication.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Voxel grid extents, slowest axis first: (depth, height, width).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims3 {
    pub d: usize,
    pub h: usize,
    pub w: usize,
}

impl Dims3 {
    pub fn new(d: usize, h: usize, w: usize) -> Self {
        Self { d, h, w }
    }

    pub fn cube(n: usize) -> Self {
        Self { d: n, h: n, w: n }
    }

    /// Voxels per channel.
    pub fn len(&self) -> usize {
        self.d * self.h * self.w
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Linear index of (z, y, x) within one channel.
    pub fn index(&self, z: usize, y: usize, x: usize) -> usize {
        (z * self.h + y) * self.w + x
    }

    /// Inverse of [`Dims3::index`].
    pub fn coords(&self, idx: usize) -> (usize, usize, usize) {
        let x = idx % self.w;
        let y = (idx / self.w) % self.h;
        let z = idx / (self.w * self.h);
        (z, y, x)
    }
}

impl fmt::Display for Dims3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.d, self.h, self.w)
    }
}

/// Label code for background voxels.
pub const LABEL_BACKGROUND: u8 = 0;
/// Gd-enhancing tumour.
pub const LABEL_ENHANCING: u8 = 1;
/// Edema.
pub const LABEL_EDEMA: u8 = 2;
/// Necrotic / non-enhancing tumour.
pub const LABEL_NECROTIC: u8 = 3;

/// The three nested binary segmentation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HierClass {
    /// Labels 1 + 2 + 3.
    Whole,
    /// Labels 1 + 3.
    Core,
    /// Label 1 only.
    Active,
}

impl HierClass {
    pub const ALL: [HierClass; 3] = [HierClass::Whole, HierClass::Core, HierClass::Active];

    pub fn as_str(&self) -> &'static str {
        match self {
            HierClass::Whole => "whole",
            HierClass::Core => "core",
            HierClass::Active => "active",
        }
    }

    pub fn from_str_opt(s: &str) -> Option<Self> {
        match s {
            "whole" => Some(HierClass::Whole),
            "core" => Some(HierClass::Core),
            "active" => Some(HierClass::Active),
            _ => None,
        }
    }

    /// Whether a raw label belongs to this hierarchical class.
    pub fn contains_label(&self, label: u8) -> bool {
        match self {
            HierClass::Whole => matches!(label, 1 | 2 | 3),
            HierClass::Core => matches!(label, 1 | 3),
            HierClass::Active => label == 1,
        }
    }
}

impl fmt::Display for HierClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Errors from volume construction and the on-disk format.
#[derive(Debug, Error)]
pub enum VolumeError {
    #[error("data length {actual} does not match channels x dims = {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("non-finite value at flat index {index}")]
    NonFinite { index: usize },
    #[error("probability {value} out of [0,1] at flat index {index}")]
    ProbOutOfRange { index: usize, value: f32 },
    #[error("invalid label {label} at voxel index {index} (must be 0..=3)")]
    InvalidLabel { index: usize, label: u8 },
    #[error("volume file missing: {0}")]
    MissingFile(PathBuf),
    #[error("payload size mismatch: header implies {expected} bytes, payload has {actual}")]
    PayloadSizeMismatch { expected: usize, actual: usize },
    #[error("unknown dtype {0:?} (expected \"f32\" or \"u8\")")]
    UnknownDtype(String),
    #[error("unsupported layout order {0:?} (expected \"c-major\")")]
    UnknownOrder(String),
    #[error("label volumes must have exactly 1 channel, header says {0}")]
    LabelChannels(usize),
    #[error("malformed header: {0}")]
    Header(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Dense 3D scalar field with `channels` channels; the network input.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiChannelVolume {
    dims: Dims3,
    channels: usize,
    spacing_mm: [f32; 3],
    data: Vec<f32>,
}

impl MultiChannelVolume {
    /// Construct, validating length and finiteness.
    pub fn new(
        dims: Dims3,
        channels: usize,
        spacing_mm: [f32; 3],
        data: Vec<f32>,
    ) -> Result<Self, VolumeError> {
        let expected = channels * dims.len();
        if data.len() != expected {
            return Err(VolumeError::LengthMismatch {
                expected,
                actual: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(VolumeError::NonFinite { index });
        }
        Ok(Self {
            dims,
            channels,
            spacing_mm,
            data,
        })
    }

    pub fn dims(&self) -> Dims3 {
        self.dims
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn spacing_mm(&self) -> [f32; 3] {
        self.spacing_mm
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    /// One channel's voxels, contiguous.
    pub fn channel(&self, c: usize) -> &[f32] {
        let n = self.dims.len();
        &self.data[c * n..(c + 1) * n]
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), VolumeError> {
        let header = VolumeHeader {
            dims: [self.dims.d, self.dims.h, self.dims.w],
            channels: self.channels,
            dtype: "f32".to_string(),
            spacing_mm: self.spacing_mm,
            order: "c-major".to_string(),
        };
        let mut payload = Vec::with_capacity(self.data.len() * 4);
        for v in &self.data {
            payload.extend_from_slice(&v.to_le_bytes());
        }
        write_pair(path.as_ref(), &header, &payload)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, VolumeError> {
        match read_volume(path)? {
            AnyVolume::Scalar(v) => Ok(v),
            AnyVolume::Labels(l) => Err(VolumeError::UnknownDtype(format!(
                "u8 (label) volume at {}, expected f32",
                l_path_hint(&l)
            ))),
        }
    }
}

fn l_path_hint(l: &LabelVolume) -> String {
    format!("{} voxels", l.dims().len())
}

/// Integer ground-truth labels, one per voxel, in {0,1,2,3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVolume {
    dims: Dims3,
    spacing_mm: [f32; 3],
    labels: Vec<u8>,
}

impl LabelVolume {
    /// Construct, validating length and the label alphabet.
    pub fn new(dims: Dims3, spacing_mm: [f32; 3], labels: Vec<u8>) -> Result<Self, VolumeError> {
        if labels.len() != dims.len() {
            return Err(VolumeError::LengthMismatch {
                expected: dims.len(),
                actual: labels.len(),
            });
        }
        if let Some(index) = labels.iter().position(|&l| l > 3) {
            return Err(VolumeError::InvalidLabel {
                index,
                label: labels[index],
            });
        }
        Ok(Self {
            dims,
            spacing_mm,
            labels,
        })
    }

    pub fn dims(&self) -> Dims3 {
        self.dims
    }

    pub fn spacing_mm(&self) -> [f32; 3] {
        self.spacing_mm
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Binary mask of one hierarchical class.
    pub fn class_mask(&self, class: HierClass) -> MaskVolume {
        MaskVolume {
            dims: self.dims,
            mask: self
                .labels
                .iter()
                .map(|&l| class.contains_label(l))
                .collect(),
        }
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), VolumeError> {
        let header = VolumeHeader {
            dims: [self.dims.d, self.dims.h, self.dims.w],
            channels: 1,
            dtype: "u8".to_string(),
            spacing_mm: self.spacing_mm,
            order: "c-major".to_string(),
        };
        write_pair(path.as_ref(), &header, &self.labels)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, VolumeError> {
        match read_volume(path)? {
            AnyVolume::Labels(l) => Ok(l),
            AnyVolume::Scalar(_) => Err(VolumeError::UnknownDtype(
                "f32 volume where u8 labels expected".to_string(),
            )),
        }
    }
}

/// A binary volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskVolume {
    dims: Dims3,
    mask: Vec<bool>,
}

impl MaskVolume {
    pub fn new(dims: Dims3, mask: Vec<bool>) -> Result<Self, VolumeError> {
        if mask.len() != dims.len() {
            return Err(VolumeError::LengthMismatch {
                expected: dims.len(),
                actual: mask.len(),
            });
        }
        Ok(Self { dims, mask })
    }

    pub fn dims(&self) -> Dims3 {
        self.dims
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.mask
    }

    /// Number of set voxels.
    pub fn count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Voxel-wise subset test.
    pub fn is_subset_of(&self, other: &MaskVolume) -> bool {
        self.dims == other.dims
            && self
                .mask
                .iter()
                .zip(&other.mask)
                .all(|(&a, &b)| !a || b)
    }
}

/// The nested binary segmentations derived from a label volume.
#[derive(Debug, Clone)]
pub struct HierarchicalMasks {
    pub active: MaskVolume,
    pub core: MaskVolume,
    pub whole: MaskVolume,
}

impl HierarchicalMasks {
    pub fn get(&self, class: HierClass) -> &MaskVolume {
        match class {
            HierClass::Whole => &self.whole,
            HierClass::Core => &self.core,
            HierClass::Active => &self.active,
        }
    }
}

/// Derive active (1), core (1+3) and whole (1+2+3) masks from labels.
///
/// Errors with the offending voxel index if a label falls outside {0..3}.
pub fn hierarchical_masks(labels: &LabelVolume) -> Result<HierarchicalMasks, VolumeError> {
    let n = labels.dims.len();
    let mut active = vec![false; n];
    let mut core = vec![false; n];
    let mut whole = vec![false; n];
    for (index, &label) in labels.labels.iter().enumerate() {
        match label {
            0 => {}
            1 => {
                active[index] = true;
                core[index] = true;
                whole[index] = true;
            }
            2 => {
                whole[index] = true;
            }
            3 => {
                core[index] = true;
                whole[index] = true;
            }
            _ => return Err(VolumeError::InvalidLabel { index, label }),
        }
    }
    Ok(HierarchicalMasks {
        active: MaskVolume {
            dims: labels.dims,
            mask: active,
        },
        core: MaskVolume {
            dims: labels.dims,
            mask: core,
        },
        whole: MaskVolume {
            dims: labels.dims,
            mask: whole,
        },
    })
}

/// Per-voxel foreground probability.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVolume {
    dims: Dims3,
    p: Vec<f32>,
}

impl ProbVolume {
    pub fn new(dims: Dims3, p: Vec<f32>) -> Result<Self, VolumeError> {
        if p.len() != dims.len() {
            return Err(VolumeError::LengthMismatch {
                expected: dims.len(),
                actual: p.len(),
            });
        }
        for (index, &value) in p.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(VolumeError::ProbOutOfRange { index, value });
            }
        }
        Ok(Self { dims, p })
    }

    pub fn dims(&self) -> Dims3 {
        self.dims
    }

    pub fn p(&self) -> &[f32] {
        &self.p
    }

    /// Threshold into a binary mask; `p >= thr` is foreground.
    pub fn threshold(&self, thr: f32) -> MaskVolume {
        MaskVolume {
            dims: self.dims,
            mask: self.p.iter().map(|&v| v >= thr).collect(),
        }
    }
}

/// Foreground volume V = sum over voxels of p(x_i), in voxel-count units.
///
/// Accumulates in f64 in a fixed voxel order. Physical units are applied
/// only when reporting, never here.
pub fn volume_of(p: &ProbVolume) -> f64 {
    p.p.iter().map(|&v| v as f64).sum()
}

/// Voxel count of a binary mask as a volume (for ground truths).
pub fn mask_volume(mask: &MaskVolume) -> f64 {
    mask.count() as f64
}

#[derive(Debug, Serialize, Deserialize)]
struct VolumeHeader {
    dims: [usize; 3],
    channels: usize,
    dtype: String,
    spacing_mm: [f32; 3],
    order: String,
}

/// Either payload type the format can hold.
#[derive(Debug, Clone)]
pub enum AnyVolume {
    Scalar(MultiChannelVolume),
    Labels(LabelVolume),
}

/// Map a user path (with or without extension) onto the header/payload pair.
fn pair_paths(path: &Path) -> (PathBuf, PathBuf) {
    let stem = match path.extension().and_then(|e| e.to_str()) {
        Some("vjson") | Some("vraw") => path.with_extension(""),
        _ => path.to_path_buf(),
    };
    (stem.with_extension("vjson"), stem.with_extension("vraw"))
}

fn write_pair(path: &Path, header: &VolumeHeader, payload: &[u8]) -> Result<(), VolumeError> {
    let (hpath, ppath) = pair_paths(path);
    if let Some(parent) = hpath.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut hf = fs::File::create(&hpath)?;
    serde_json::to_writer_pretty(&mut hf, header)?;
    hf.write_all(b"\n")?;
    fs::write(&ppath, payload)?;
    Ok(())
}

/// Read a `.vjson`/`.vraw` pair back into the matching volume type.
///
/// Lossless: writing then reading reproduces every value bit-exactly.
pub fn read_volume(path: impl AsRef<Path>) -> Result<AnyVolume, VolumeError> {
    let (hpath, ppath) = pair_paths(path.as_ref());
    if !hpath.exists() {
        return Err(VolumeError::MissingFile(hpath));
    }
    if !ppath.exists() {
        return Err(VolumeError::MissingFile(ppath));
    }
    let header: VolumeHeader = serde_json::from_slice(&fs::read(&hpath)?)?;
    if header.order != "c-major" {
        return Err(VolumeError::UnknownOrder(header.order));
    }
    let dims = Dims3::new(header.dims[0], header.dims[1], header.dims[2]);
    let payload = fs::read(&ppath)?;
    match header.dtype.as_str() {
        "f32" => {
            let expected = header.channels * dims.len() * 4;
            if payload.len() != expected {
                return Err(VolumeError::PayloadSizeMismatch {
                    expected,
                    actual: payload.len(),
                });
            }
            let data: Vec<f32> = payload
                .chunks_exact(4)
                .map(|b| f32::from_le_bytes([b[0], b[1], b[2], b[3]]))
                .collect();
            Ok(AnyVolume::Scalar(MultiChannelVolume::new(
                dims,
                header.channels,
                header.spacing_mm,
                data,
            )?))
        }
        "u8" => {
            if header.channels != 1 {
                return Err(VolumeError::LabelChannels(header.channels));
            }
            let expected = dims.len();
            if payload.len() != expected {
                return Err(VolumeError::PayloadSizeMismatch {
                    expected,
                    actual: payload.len(),
                });
            }
            Ok(AnyVolume::Labels(LabelVolume::new(
                dims,
                header.spacing_mm,
                payload,
            )?))
        }
        other => Err(VolumeError::UnknownDtype(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels_from(dims: Dims3, labels: Vec<u8>) -> LabelVolume {
        LabelVolume::new(dims, [1.0; 3], labels).unwrap()
    }

    #[test]
    fn masks_label_one_sets_all() {
        let lv = labels_from(Dims3::new(1, 1, 1), vec![1]);
        let m = hierarchical_masks(&lv).unwrap();
        assert!(m.active.as_slice()[0]);
        assert!(m.core.as_slice()[0]);
        assert!(m.whole.as_slice()[0]);
    }

    #[test]
    fn masks_background_sets_none() {
        let lv = labels_from(Dims3::new(1, 1, 1), vec![0]);
        let m = hierarchical_masks(&lv).unwrap();
        assert!(!m.active.as_slice()[0]);
        assert!(!m.core.as_slice()[0]);
        assert!(!m.whole.as_slice()[0]);
    }

    #[test]
    fn masks_label_three_is_core_and_whole() {
        let lv = labels_from(Dims3::new(1, 1, 1), vec![3]);
        let m = hierarchical_masks(&lv).unwrap();
        assert!(!m.active.as_slice()[0]);
        assert!(m.core.as_slice()[0]);
        assert!(m.whole.as_slice()[0]);
    }

    #[test]
    fn invalid_label_names_the_voxel() {
        // LabelVolume::new validates too, so exercise hierarchical_masks
        // through a volume built from raw parts.
        let err = LabelVolume::new(Dims3::new(1, 1, 3), [1.0; 3], vec![0, 7, 1]).unwrap_err();
        match err {
            VolumeError::InvalidLabel { index, label } => {
                assert_eq!(index, 1);
                assert_eq!(label, 7);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn volume_of_zero_volume() {
        let p = ProbVolume::new(Dims3::new(2, 2, 2), vec![0.0; 8]).unwrap();
        assert_eq!(volume_of(&p), 0.0);
    }

    #[test]
    fn volume_of_binary_mask_counts() {
        let mut v = vec![0.0f32; 27];
        for i in 0..7 {
            v[i * 3] = 1.0;
        }
        let p = ProbVolume::new(Dims3::new(3, 3, 3), v).unwrap();
        assert_eq!(volume_of(&p), 7.0);
    }

    #[test]
    fn volume_of_matches_direct_summation() {
        let vals = [0.2f32, 0.3, 0.5];
        let p = ProbVolume::new(Dims3::new(1, 1, 3), vals.to_vec()).unwrap();
        // Independent oracle: plain running sum in f64.
        let mut oracle = 0.0f64;
        for v in vals {
            oracle += v as f64;
        }
        assert_eq!(volume_of(&p), oracle);
        assert!((volume_of(&p) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn file_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let dims = Dims3::new(3, 4, 5);
        let data: Vec<f32> = (0..2 * dims.len()).map(|i| (i as f32).sin()).collect();
        let vol = MultiChannelVolume::new(dims, 2, [1.0, 1.5, 2.0], data).unwrap();
        let path = dir.path().join("subject");
        vol.write(&path).unwrap();
        let back = MultiChannelVolume::read(&path).unwrap();
        assert_eq!(vol, back);

        let labels = labels_from(dims, (0..dims.len()).map(|i| (i % 4) as u8).collect());
        let lpath = dir.path().join("labels");
        labels.write(&lpath).unwrap();
        let lback = LabelVolume::read(&lpath).unwrap();
        assert_eq!(labels, lback);
    }

    #[test]
    fn truncated_payload_is_size_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let dims = Dims3::new(2, 2, 2);
        let vol = MultiChannelVolume::new(dims, 1, [1.0; 3], vec![0.5; 8]).unwrap();
        let path = dir.path().join("v");
        vol.write(&path).unwrap();
        let raw = path.with_extension("vraw");
        let mut bytes = fs::read(&raw).unwrap();
        bytes.pop();
        fs::write(&raw, &bytes).unwrap();
        match read_volume(&path).unwrap_err() {
            VolumeError::PayloadSizeMismatch { expected, actual } => {
                assert_eq!(expected, 32);
                assert_eq!(actual, 31);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dtype_byte_count_accepted() {
        // f32 header with payload of exactly 4*C*D*H*W bytes is accepted.
        let dir = tempfile::tempdir().unwrap();
        let dims = Dims3::new(2, 3, 2);
        let c = 3;
        let vol =
            MultiChannelVolume::new(dims, c, [1.0; 3], vec![0.25; c * dims.len()]).unwrap();
        let path = dir.path().join("ok");
        vol.write(&path).unwrap();
        assert_eq!(
            fs::read(path.with_extension("vraw")).unwrap().len(),
            4 * c * dims.len()
        );
        assert!(matches!(read_volume(&path), Ok(AnyVolume::Scalar(_))));
    }

    #[test]
    fn unknown_dtype_is_distinct_error() {
        let dir = tempfile::tempdir().unwrap();
        let hpath = dir.path().join("x.vjson");
        fs::write(
            &hpath,
            r#"{"dims":[1,1,1],"channels":1,"dtype":"f16","spacing_mm":[1,1,1],"order":"c-major"}"#,
        )
        .unwrap();
        fs::write(dir.path().join("x.vraw"), [0u8, 0]).unwrap();
        match read_volume(dir.path().join("x")).unwrap_err() {
            VolumeError::UnknownDtype(d) => assert_eq!(d, "f16"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_file_is_distinct_error() {
        let dir = tempfile::tempdir().unwrap();
        match read_volume(dir.path().join("nope")).unwrap_err() {
            VolumeError::MissingFile(p) => assert!(p.to_string_lossy().ends_with("nope.vjson")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_finite_rejected() {
        let err =
            MultiChannelVolume::new(Dims3::new(1, 1, 2), 1, [1.0; 3], vec![1.0, f32::NAN])
                .unwrap_err();
        assert!(matches!(err, VolumeError::NonFinite { index: 1 }));
    }

    proptest! {
        #[test]
        fn masks_are_always_nested(labels in proptest::collection::vec(0u8..=3, 27)) {
            let lv = labels_from(Dims3::new(3, 3, 3), labels);
            let m = hierarchical_masks(&lv).unwrap();
            prop_assert!(m.active.is_subset_of(&m.core));
            prop_assert!(m.core.is_subset_of(&m.whole));
        }

        #[test]
        fn volume_of_is_linear(
            a in proptest::collection::vec(0.0f32..=1.0, 16),
            b in proptest::collection::vec(0.0f32..=1.0, 16),
            lambda in 0.0f64..=1.0,
        ) {
            let dims = Dims3::new(2, 2, 4);
            let pa = ProbVolume::new(dims, a.clone()).unwrap();
            let pb = ProbVolume::new(dims, b.clone()).unwrap();
            let mix: Vec<f32> = a.iter().zip(&b)
                .map(|(&x, &y)| (lambda * x as f64 + (1.0 - lambda) * y as f64) as f32)
                .collect();
            let pm = ProbVolume::new(dims, mix).unwrap();
            let lhs = volume_of(&pm);
            let rhs = lambda * volume_of(&pa) + (1.0 - lambda) * volume_of(&pb);
            prop_assert!((lhs - rhs).abs() < 1e-4);
        }

        #[test]
        fn round_trip_identity(
            data in proptest::collection::vec(-1e6f32..=1e6, 24),
        ) {
            let dir = tempfile::tempdir().unwrap();
            let dims = Dims3::new(2, 3, 4);
            let vol = MultiChannelVolume::new(dims, 1, [1.0; 3], data).unwrap();
            let path = dir.path().join("rt");
            vol.write(&path).unwrap();
            let back = MultiChannelVolume::read(&path).unwrap();
            prop_assert_eq!(vol, back);
        }
    }
}
