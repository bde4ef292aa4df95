//! The three diagnosis applications: four patients against five diagnoses each.

use crate::classify::{classify_batch, ClassificationResult, PatternLibrary};
use crate::dataset::Dataset;
use crate::distance::{DistanceMethod, DistanceValue};
use crate::error::{Error, Result};
use crate::pfs::PfsSet;

use super::data;

#[derive(Debug, Clone, PartialEq)]
pub struct ApplicationDataset {
    pub id: u8,
    pub patients: Vec<PfsSet>,
    pub diagnoses: PatternLibrary,
}

impl ApplicationDataset {
    pub fn diagnosis_labels(&self) -> Vec<&str> {
        self.diagnoses.names().collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApplicationResult {
    pub id: u8,
    pub patients: Vec<String>,
    pub diagnoses: Vec<String>,
    /// Patient-major.
    pub distances: Vec<Vec<DistanceValue>>,
    pub judgments: Vec<String>,
    pub classifications: Vec<ClassificationResult>,
}

fn check_id(id: u8) -> Result<()> {
    if (1..=3).contains(&id) {
        Ok(())
    } else {
        Err(Error::range("application id", f64::from(id), "1, 2 or 3"))
    }
}

/// Raw JSON of the patient and diagnosis files.
pub fn application_files(id: u8) -> Result<(&'static str, &'static str)> {
    check_id(id)?;
    Ok(match id {
        1 => (data::APP1_PATIENTS, data::APP1_DIAGNOSES),
        2 => (data::APP2_PATIENTS, data::APP2_DIAGNOSES),
        _ => (data::APP3_PATIENTS, data::APP3_DIAGNOSES),
    })
}

pub fn application_dataset(id: u8) -> Result<ApplicationDataset> {
    let (patients, diagnoses) = application_files(id)?;
    let patients = Dataset::from_json_str(patients, crate::DEFAULT_EPSILON)?.into_sets();
    let diagnoses = PatternLibrary::new(
        Dataset::from_json_str(diagnoses, crate::DEFAULT_EPSILON)?.into_sets(),
    )?;
    Ok(ApplicationDataset {
        id,
        patients,
        diagnoses,
    })
}

/// Matrix distances from every patient to every diagnosis, and the nearest diagnosis per patient.
pub fn run_application(id: u8) -> Result<ApplicationResult> {
    let app = application_dataset(id)?;
    let classifications = classify_batch(&app.diagnoses, &app.patients, DistanceMethod::PfsMatrix)?;
    Ok(ApplicationResult {
        id,
        patients: app.patients.iter().map(|p| p.name().to_string()).collect(),
        diagnoses: app.diagnoses.names().map(str::to_string).collect(),
        distances: classifications
            .iter()
            .map(|c| c.distances.iter().map(|(_, d)| *d).collect())
            .collect(),
        judgments: classifications
            .iter()
            .map(|c| c.winner_name().to_string())
            .collect(),
        classifications,
    })
}
