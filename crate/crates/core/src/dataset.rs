//! Labeled feature vectors and their CSV representation
//! (`label,f1,...,fp`, label in {−1, 1} or {0, 1}).

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i64")]
pub enum Label {
    Negative,
    Positive,
}

impl Label {
    pub fn as_i8(self) -> i8 {
        match self {
            Label::Negative => -1,
            Label::Positive => 1,
        }
    }

    /// Accepts −1/+1 and the 0/1 convention (0 maps to negative).
    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Label::Positive),
            0 | -1 => Ok(Label::Negative),
            other => Err(Error::Parse(format!("label must be -1, 0 or 1, got {other}"))),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Label::Negative => Label::Positive,
            Label::Positive => Label::Negative,
        }
    }
}

impl From<Label> for i8 {
    fn from(l: Label) -> i8 {
        l.as_i8()
    }
}

impl TryFrom<i64> for Label {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        Label::from_int(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    p: usize,
    samples: Vec<Vec<f64>>,
    labels: Vec<Label>,
}

impl LabeledDataset {
    pub fn new(p: usize, samples: Vec<Vec<f64>>, labels: Vec<Label>) -> Result<Self> {
        if p == 0 {
            return Err(Error::EmptyInput("feature dimension"));
        }
        if samples.is_empty() {
            return Err(Error::EmptyInput("dataset has no samples"));
        }
        check_dim(samples.len(), labels.len())?;
        for s in &samples {
            check_dim(p, s.len())?;
            if s.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite("sample features"));
            }
        }
        Ok(Self { p, samples, labels })
    }

    /// Concatenates a positive and a negative sample set.
    pub fn from_classes(positive: Vec<Vec<f64>>, negative: Vec<Vec<f64>>) -> Result<Self> {
        let p = positive
            .first()
            .or(negative.first())
            .map(Vec::len)
            .ok_or(Error::EmptyInput("dataset has no samples"))?;
        let mut labels = vec![Label::Positive; positive.len()];
        labels.extend(std::iter::repeat_n(Label::Negative, negative.len()));
        let mut samples = positive;
        samples.extend(negative);
        Self::new(p, samples, labels)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], Label)> {
        self.samples.iter().map(Vec::as_slice).zip(self.labels.iter().copied())
    }

    pub fn class_samples(&self, label: Label) -> Vec<&[f64]> {
        self.iter()
            .filter(|(_, l)| *l == label)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn count(&self, label: Label) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// Subset by row indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let samples = indices.iter().map(|&i| self.samples[i].clone()).collect();
        let labels = indices.iter().map(|&i| self.labels[i]).collect();
        Self::new(self.p, samples, labels)
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers()?.clone();
        if header.get(0) != Some("label") || header.len() < 2 {
            return Err(Error::Parse(
                "dataset CSV header must be `label,f1,...,fp`".into(),
            ));
        }
        let p = header.len() - 1;
        let mut samples = Vec::new();
        let mut labels = Vec::new();
        for (line, record) in rdr.records().enumerate() {
            let record = record?;
            let raw = &record[0];
            let label = raw
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("row {line}: invalid label {raw:?}")))
                .and_then(Label::from_int)?;
            let x = record
                .iter()
                .skip(1)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("row {line}: invalid value {v:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            labels.push(label);
            samples.push(x);
        }
        Self::new(p, samples, labels)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        let mut header = vec!["label".to_string()];
        header.extend((1..=self.p).map(|j| format!("f{j}")));
        wtr.write_record(&header)?;
        for (x, l) in self.iter() {
            let mut row = Vec::with_capacity(self.p + 1);
            row.push(l.as_i8().to_string());
            row.extend(x.iter().map(|v| format!("{v}")));
            wtr.write_record(&row)?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_csv(std::fs::File::open(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_csv(std::fs::File::create(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_conventions() {
        assert_eq!(Label::from_int(0).unwrap(), Label::Negative);
        assert_eq!(Label::from_int(-1).unwrap(), Label::Negative);
        assert_eq!(Label::from_int(1).unwrap(), Label::Positive);
        assert!(Label::from_int(2).is_err());
    }

    #[test]
    fn csv_round_trip_and_zero_one_labels() {
        let csv = "label,f1,f2\n1,0.5,2\n0,1,3\n-1,0,0\n";
        let d = LabeledDataset::read_csv(csv.as_bytes()).unwrap();
        assert_eq!(d.p(), 2);
        assert_eq!(d.labels(), &[Label::Positive, Label::Negative, Label::Negative]);
        let mut out = Vec::new();
        d.write_csv(&mut out).unwrap();
        let back = LabeledDataset::read_csv(out.as_slice()).unwrap();
        assert_eq!(back, d);
        assert!(String::from_utf8(out).unwrap().starts_with("label,f1,f2\n1,0.5,2\n-1,"));
    }

    #[test]
    fn csv_rejects_bad_rows() {
        assert!(LabeledDataset::read_csv("y,f1\n1,2\n".as_bytes()).is_err());
        assert!(LabeledDataset::read_csv("label,f1\n3,2\n".as_bytes()).is_err());
        assert!(LabeledDataset::read_csv("label,f1\n1,abc\n".as_bytes()).is_err());
        assert!(LabeledDataset::read_csv("label,f1\n".as_bytes()).is_err());
    }

    #[test]
    fn construction_validates_lengths() {
        assert!(LabeledDataset::new(2, vec![vec![1.0]], vec![Label::Positive]).is_err());
        assert!(LabeledDataset::new(1, vec![vec![1.0]], vec![]).is_err());
    }
}
