//! Website dataset CSV ingestion.

use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::color::{parse_hex, RgbColor};
use crate::error::{Error, Result};

pub const COLUMNS: [&str; 8] = [
    "Website ID",
    "Website Name",
    "Website Link",
    "Website Category",
    "First color",
    "Second color",
    "Third color",
    "Font-Family",
];

pub const BUNDLED_SAMPLE_CSV: &str = include_str!("../../data/sample_sites.csv");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebsiteRecord {
    pub id: u64,
    pub name: String,
    pub link: String,
    pub category: String,
    pub colors: [RgbColor; 3],
    pub font_family: String,
}

/// One data row with its source line and parse outcome.
#[derive(Debug)]
pub struct DatasetRow {
    pub line: u64,
    pub fields: csv::StringRecord,
    pub record: Result<WebsiteRecord>,
}

/// Parsed dataset: the header as written and every data row.
#[derive(Debug)]
pub struct Dataset {
    pub header: csv::StringRecord,
    pub rows: Vec<DatasetRow>,
}

impl Dataset {
    /// Reads every row, keeping per-row failures instead of stopping.
    pub fn read(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).flexible(true).from_reader(reader);
        let header = rdr.headers().map_err(|e| Error::Schema(e.to_string()))?.clone();
        let index = column_index(&header)?;
        let mut ids = HashSet::new();
        let mut rows = Vec::new();
        for result in rdr.records() {
            let fields = match result {
                Ok(f) => f,
                Err(e) => {
                    let line = e.position().map_or(0, |p| p.line());
                    rows.push(DatasetRow {
                        line,
                        fields: csv::StringRecord::new(),
                        record: Err(Error::Row { line, message: e.to_string() }),
                    });
                    continue;
                }
            };
            let line = fields.position().map_or(0, |p| p.line());
            let record = parse_row(&fields, &index).and_then(|r| {
                if ids.insert(r.id) {
                    Ok(r)
                } else {
                    Err(format!("duplicate Website ID {}", r.id))
                }
            });
            let record = record.map_err(|message| Error::Row { line, message });
            rows.push(DatasetRow { line, fields, record });
        }
        Ok(Self { header, rows })
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read(std::io::BufReader::new(file))
    }

    /// All records, failing on the first bad row.
    pub fn into_records(self) -> Result<Vec<WebsiteRecord>> {
        self.rows.into_iter().map(|r| r.record).collect()
    }
}

fn column_index(header: &csv::StringRecord) -> Result<[usize; 8]> {
    let mut index = [0; 8];
    for (slot, name) in index.iter_mut().zip(COLUMNS) {
        *slot = header
            .iter()
            .position(|h| h.trim().trim_start_matches('\u{feff}') == name)
            .ok_or_else(|| Error::Schema(format!("missing column {name:?}")))?;
    }
    Ok(index)
}

fn parse_row(fields: &csv::StringRecord, index: &[usize; 8]) -> std::result::Result<WebsiteRecord, String> {
    let get = |col: usize| {
        fields.get(index[col]).map(str::trim).ok_or_else(|| format!("missing value for {:?}", COLUMNS[col]))
    };
    let id = get(0)?;
    let id = id.parse().map_err(|_| format!("Website ID {id:?} is not a non-negative integer"))?;
    let color = |col: usize| -> std::result::Result<RgbColor, String> {
        parse_hex(get(col)?).map_err(|e| format!("{}: {e}", COLUMNS[col]))
    };
    Ok(WebsiteRecord {
        id,
        name: get(1)?.to_owned(),
        link: get(2)?.to_owned(),
        category: get(3)?.to_owned(),
        colors: [color(4)?, color(5)?, color(6)?],
        font_family: get(7)?.to_owned(),
    })
}

/// Loads a dataset file, rejecting it on the first malformed row.
pub fn ingest_dataset(path: impl AsRef<Path>) -> Result<Vec<WebsiteRecord>> {
    Dataset::open(path)?.into_records()
}

/// The ten bundled sample records.
pub fn bundled_sample() -> Vec<WebsiteRecord> {
    Dataset::read(BUNDLED_SAMPLE_CSV.as_bytes()).and_then(Dataset::into_records).expect("bundled sample parses")
}
