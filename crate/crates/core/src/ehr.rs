//! Visit logs to labeled diagnosis-frequency vectors.
//!
//! Each input row is one diagnosis code recorded at one visit; a visit is a
//! distinct `(patient_id, visit_date)` pair. Codes are mapped to dense
//! cluster ids, and a patient is positive when any visit carries a target
//! cluster. For positives, everything dated on or after
//! `onset − horizon_days` is dropped, where `onset` is the first target-coded
//! visit. Patients left with fewer than two visits are excluded, and the
//! target columns are zeroed so the predictors describe only non-target
//! history. Negatives keep their full history.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::dataset::{Label, LabeledDataset};
use crate::error::{Error, Result};

pub const DATE_FORMAT: &str = "%Y-%m-%d";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VisitRecord {
    pub patient_id: String,
    pub visit_date: NaiveDate,
    pub code: String,
}

impl VisitRecord {
    pub fn new(patient_id: impl Into<String>, visit_date: &str, code: impl Into<String>) -> Result<Self> {
        let code = code.into().trim().to_string();
        if code.is_empty() {
            return Err(Error::Parse("visit record has an empty code".into()));
        }
        Ok(Self {
            patient_id: patient_id.into(),
            visit_date: parse_date(visit_date)?,
            code,
        })
    }
}

pub fn parse_date(text: &str) -> Result<NaiveDate> {
    NaiveDate::parse_from_str(text.trim(), DATE_FORMAT).map_err(|_| Error::MalformedDate(text.to_string()))
}

#[derive(Debug, Deserialize)]
struct VisitRow {
    patient_id: String,
    visit_date: String,
    code: String,
}

/// Reads `patient_id,visit_date,code` rows.
pub fn read_visits<R: Read>(reader: R) -> Result<Vec<VisitRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let expected = ["patient_id", "visit_date", "code"];
    if rdr.headers()?.iter().ne(expected) {
        return Err(Error::Parse("visits CSV header must be `patient_id,visit_date,code`".into()));
    }
    rdr.deserialize::<VisitRow>()
        .map(|row| {
            let row = row?;
            VisitRecord::new(row.patient_id, &row.visit_date, row.code)
        })
        .collect()
}

/// Raw code → dense cluster id, plus the clusters that define a positive.
///
/// Cluster labels are kept as given (e.g. `"651"`) and numbered in ascending
/// order, numerically when every label is an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeMap {
    codes: BTreeMap<String, usize>,
    cluster_labels: Vec<String>,
    targets: BTreeSet<usize>,
}

impl CodeMap {
    pub fn new<C, L, T>(pairs: impl IntoIterator<Item = (C, L)>, target_labels: impl IntoIterator<Item = T>) -> Result<Self>
    where
        C: Into<String>,
        L: Into<String>,
        T: AsRef<str>,
    {
        let mut raw: BTreeMap<String, String> = BTreeMap::new();
        for (code, label) in pairs {
            let code = code.into().trim().to_string();
            let label = label.into().trim().to_string();
            if code.is_empty() || label.is_empty() {
                return Err(Error::Parse("code map entries must be non-empty".into()));
            }
            if let Some(prev) = raw.get(&code) {
                if *prev != label {
                    return Err(Error::Parse(format!(
                        "code {code:?} mapped to both {prev:?} and {label:?}"
                    )));
                }
            }
            raw.insert(code, label);
        }
        if raw.is_empty() {
            return Err(Error::EmptyInput("code map"));
        }

        let mut cluster_labels: Vec<String> = raw.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        if cluster_labels.iter().all(|l| l.parse::<i64>().is_ok()) {
            cluster_labels.sort_by_key(|l| l.parse::<i64>().unwrap_or_default());
        }
        let index: BTreeMap<&str, usize> = cluster_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut targets = BTreeSet::new();
        for t in target_labels {
            let t = t.as_ref().trim();
            let id = index
                .get(t)
                .ok_or_else(|| Error::InvalidParameter(format!("target cluster {t:?} is not in the code map")))?;
            targets.insert(*id);
        }
        if targets.is_empty() {
            return Err(Error::InvalidParameter("at least one target cluster is required".into()));
        }

        let codes = raw.iter().map(|(c, l)| (c.clone(), index[l.as_str()])).collect();
        Ok(Self {
            codes,
            cluster_labels,
            targets,
        })
    }

    /// Reads `code,cluster` rows.
    pub fn read_csv<R: Read, T: AsRef<str>>(reader: R, target_labels: impl IntoIterator<Item = T>) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        if rdr.headers()?.iter().ne(["code", "cluster"]) {
            return Err(Error::Parse("code map CSV header must be `code,cluster`".into()));
        }
        let mut pairs = Vec::new();
        for record in rdr.records() {
            let record = record?;
            if record.len() != 2 {
                return Err(Error::Parse("code map rows must have two fields".into()));
            }
            pairs.push((record[0].to_string(), record[1].to_string()));
        }
        Self::new(pairs, target_labels)
    }

    pub fn n_clusters(&self) -> usize {
        self.cluster_labels.len()
    }

    pub fn cluster_of(&self, code: &str) -> Option<usize> {
        self.codes.get(code).copied()
    }

    pub fn cluster_labels(&self) -> &[String] {
        &self.cluster_labels
    }

    pub fn targets(&self) -> &BTreeSet<usize> {
        &self.targets
    }

    pub fn is_target(&self, cluster: usize) -> bool {
        self.targets.contains(&cluster)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnmappedPolicy {
    #[default]
    Skip,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    /// Fewer than two visits before any window was applied.
    InsufficientVisits,
    /// Two or more visits originally, fewer than two once the pre-onset
    /// window and post-onset visits were dropped.
    InsufficientVisitsAfterExclusion,
}

/// One line of the ingestion audit log, one per patient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub patient_id: String,
    pub label: i8,
    /// Output row, absent for excluded patients.
    pub row: Option<usize>,
    pub excluded: Option<ExclusionReason>,
    pub first_target_date: Option<String>,
    pub visits_total: usize,
    pub visits_dropped_window: usize,
    pub visits_dropped_after_onset: usize,
    pub visits_kept: usize,
    pub codes_counted: usize,
    pub codes_unmapped: usize,
}

#[derive(Debug, Clone)]
pub struct IngestOutput {
    pub dataset: LabeledDataset,
    /// Patient id of each dataset row.
    pub patient_ids: Vec<String>,
    pub audit: Vec<AuditEntry>,
    pub unmapped_skipped: usize,
}

impl IngestOutput {
    pub fn write_audit<W: Write>(&self, mut writer: W) -> Result<()> {
        for entry in &self.audit {
            serde_json::to_writer(&mut writer, entry)?;
            writer.write_all(b"\n")?;
        }
        writer.flush()?;
        Ok(())
    }
}

pub fn build_frequency_vectors(
    visits: &[VisitRecord],
    map: &CodeMap,
    horizon_days: u32,
    policy: UnmappedPolicy,
) -> Result<IngestOutput> {
    if horizon_days == 0 {
        return Err(Error::InvalidParameter("horizon_days must be positive".into()));
    }
    let c = map.n_clusters();

    // patient → date → mapped clusters, with unmapped codes counted per patient
    let mut patients: BTreeMap<&str, (BTreeMap<NaiveDate, Vec<usize>>, usize)> = BTreeMap::new();
    for v in visits {
        let entry = patients.entry(v.patient_id.as_str()).or_default();
        let day = entry.0.entry(v.visit_date).or_default();
        match map.cluster_of(&v.code) {
            Some(k) => day.push(k),
            None if policy == UnmappedPolicy::Fail => return Err(Error::UnmappedCode(v.code.clone())),
            None => entry.1 += 1,
        }
    }

    let mut samples = Vec::new();
    let mut labels = Vec::new();
    let mut patient_ids = Vec::new();
    let mut audit = Vec::with_capacity(patients.len());
    let mut unmapped_skipped = 0;

    for (id, (days, unmapped)) in &patients {
        unmapped_skipped += unmapped;
        let onset = days
            .iter()
            .find(|(_, ks)| ks.iter().any(|&k| map.is_target(k)))
            .map(|(d, _)| *d);
        let label = if onset.is_some() { Label::Positive } else { Label::Negative };

        let mut dropped_window = 0;
        let mut dropped_after = 0;
        let mut kept = Vec::new();
        for (date, ks) in days {
            match onset {
                Some(t) if *date > t => dropped_after += 1,
                Some(t) if (t - *date).num_days() <= i64::from(horizon_days) => dropped_window += 1,
                _ => kept.push(ks),
            }
        }

        let excluded = if days.len() < 2 {
            Some(ExclusionReason::InsufficientVisits)
        } else if kept.len() < 2 {
            Some(ExclusionReason::InsufficientVisitsAfterExclusion)
        } else {
            None
        };

        let mut x = vec![0.0; c];
        let mut codes_counted = 0;
        for &k in kept.iter().flat_map(|ks| ks.iter()) {
            if !map.is_target(k) {
                x[k] += 1.0;
                codes_counted += 1;
            }
        }

        let row = if excluded.is_none() {
            samples.push(x);
            labels.push(label);
            patient_ids.push(id.to_string());
            Some(samples.len() - 1)
        } else {
            None
        };

        audit.push(AuditEntry {
            patient_id: id.to_string(),
            label: label.as_i8(),
            row,
            excluded,
            first_target_date: onset.map(|d| d.format(DATE_FORMAT).to_string()),
            visits_total: days.len(),
            visits_dropped_window: dropped_window,
            visits_dropped_after_onset: dropped_after,
            visits_kept: kept.len(),
            codes_counted: if excluded.is_none() { codes_counted } else { 0 },
            codes_unmapped: *unmapped,
        });
    }

    if samples.is_empty() {
        return Err(Error::InsufficientData("no patient survived the exclusion rules".into()));
    }
    Ok(IngestOutput {
        dataset: LabeledDataset::new(c, samples, labels)?,
        patient_ids,
        audit,
        unmapped_skipped,
    })
}
