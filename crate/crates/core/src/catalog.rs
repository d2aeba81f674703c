//! The geometry catalog: records, persistence, fixtures and search.
//!
//! Record ids are `G{n}-{k}` with `k` the 1-based position in the order
//! produced by [`enumerate_geometries`] (number of closed sets, then
//! canonical mask). This numbering is local to this tool.
//!
//! Files:
//! * catalog: one JSON [`CatalogRecord`] per line;
//! * configuration: a JSON [`ConfigurationFile`] object.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::dimension::{convex_dimension, meet_irreducibles};
use crate::disk::Circle;
use crate::enumerate::enumerate_geometries;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::implications::{generate_basis, Implication};
use crate::obstruction::{detect_obstructions, ObstructionCertificate, Pattern};
use crate::sets::{canonical_with_permutation, ConvexGeometry, FamilyMask, GroundSet, SubsetMask};
use crate::verify::{verify_full, Verdict};

/// Significant digits kept when circle coordinates are written out.
pub const COORD_DIGITS: usize = 12;

const FIXTURES_JSON: &str = include_str!("../fixtures/representations.json");

/// Round to [`COORD_DIGITS`] significant digits.
pub fn round_coordinate(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { 0.0 } else { v };
    }
    format!("{:.*e}", COORD_DIGITS - 1, v).parse().expect("formatted float")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleEntry {
    pub label: String,
    pub x: f64,
    pub y: f64,
    pub r: f64,
}

/// On-disk circle configuration: `{n, labels, circles: [{label, x, y, r}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationFile {
    pub n: usize,
    pub labels: Vec<String>,
    pub circles: Vec<CircleEntry>,
}

impl ConfigurationFile {
    pub fn from_configuration(conf: &Configuration<f64>) -> Self {
        let ground = conf.ground();
        ConfigurationFile {
            n: ground.len(),
            labels: ground.labels().map(String::from).collect(),
            circles: conf
                .circles()
                .iter()
                .enumerate()
                .map(|(i, c)| CircleEntry {
                    label: ground.label(i).to_string(),
                    x: round_coordinate(c.cx),
                    y: round_coordinate(c.cy),
                    r: round_coordinate(c.r),
                })
                .collect(),
        }
    }

    /// Validate and order the circles by label.
    pub fn to_configuration(&self) -> Result<Configuration<f64>> {
        let ground = GroundSet::new(self.n)?;
        let expected: Vec<String> = ground.labels().map(String::from).collect();
        if self.labels != expected {
            return Err(Error::Format(format!("labels must be {expected:?}, got {:?}", self.labels)));
        }
        let mut slots: Vec<Option<Circle<f64>>> = vec![None; self.n];
        for entry in &self.circles {
            let mut chars = entry.label.chars();
            let index = match (chars.next(), chars.next()) {
                (Some(c), None) => ground.index_of(c)?,
                _ => return Err(Error::Format(format!("bad circle label {:?}", entry.label))),
            };
            if slots[index].is_some() {
                return Err(Error::Format(format!("duplicate circle for label {:?}", entry.label)));
            }
            slots[index] = Some(Circle::new(entry.x, entry.y, entry.r)?);
        }
        let circles = slots
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::Format(format!("missing circle for label {:?}", ground.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(ground, circles)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Impossible,
    Open,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Impossible => "impossible",
            Status::Open => "open",
        })
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verified" => Ok(Status::Verified),
            "impossible" => Ok(Status::Impossible),
            "open" => Ok(Status::Open),
            _ => Err(Error::Query(format!("unknown status {s:?}"))),
        }
    }
}

/// Obstruction certificate with element labels, as stored in the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub pattern: Pattern,
    /// The tuple `(a, b, c, d, e)` as five labels.
    pub elements: String,
    /// `[premise, conclusion]` label pairs.
    pub implications: Vec<(String, String)>,
}

impl CertificateRecord {
    pub fn new(cert: &ObstructionCertificate, ground: GroundSet) -> Self {
        CertificateRecord {
            pattern: cert.pattern,
            elements: cert.elements.iter().map(|&i| ground.label(i)).collect(),
            implications: cert
                .implications
                .iter()
                .map(|i| (ground.decode(i.premise), ground.decode(i.conclusion)))
                .collect(),
        }
    }

    pub fn to_certificate(&self, ground: GroundSet) -> Result<ObstructionCertificate> {
        let idx: Vec<usize> = self.elements.chars().map(|c| ground.index_of(c)).collect::<Result<_>>()?;
        let elements: [usize; 5] = idx
            .try_into()
            .map_err(|_| Error::Format(format!("certificate needs five elements, got {:?}", self.elements)))?;
        let implications = ObstructionCertificate::implications_for(self.pattern, elements);
        let stored: Vec<Implication> = self
            .implications
            .iter()
            .map(|(p, c)| Ok(Implication::new(ground.encode(p)?, ground.encode(c)?)))
            .collect::<Result<_>>()?;
        if stored != implications {
            return Err(Error::Format("certificate implications do not match its pattern".into()));
        }
        Ok(ObstructionCertificate { pattern: self.pattern, elements, implications })
    }
}

/// One geometry with its derived data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub n: usize,
    pub family_mask: u32,
    pub closed_sets: Vec<String>,
    pub basis: Vec<(String, String)>,
    pub meet_irreducibles: Vec<String>,
    pub cdim: usize,
    pub unique_atom: bool,
    pub unique_coatom: bool,
    pub status: Status,
    pub certificate: Option<CertificateRecord>,
    pub representation: Option<ConfigurationFile>,
}

impl CatalogRecord {
    /// Derive every field from the geometry. A representation is kept only if it verifies.
    pub fn from_geometry(id: String, g: &ConvexGeometry, representation: Option<ConfigurationFile>) -> Self {
        let ground = g.ground();
        let labels = |sets: Vec<SubsetMask>| sets.into_iter().map(|s| ground.decode(s)).collect::<Vec<_>>();
        let certificate = detect_obstructions(g).first().map(|c| CertificateRecord::new(c, ground));
        let representation = representation.filter(|file| {
            file.to_configuration()
                .and_then(|conf| verify_full(g, &conf, f64::default_eps()))
                .is_ok_and(|r| r.verdict == Verdict::Verified)
        });
        let status = match (&certificate, &representation) {
            (Some(_), _) => Status::Impossible,
            (None, Some(_)) => Status::Verified,
            (None, None) => Status::Open,
        };
        let singletons = g.closed_sets().filter(|s| s.len() == 1).count();
        let coatoms = g.closed_sets().filter(|s| s.len() + 1 == ground.len()).count();
        CatalogRecord {
            id,
            n: ground.len(),
            family_mask: g.family().bits(),
            closed_sets: labels(g.closed_sets().collect()),
            basis: generate_basis(g)
                .iter()
                .map(|r| (ground.decode(r.premise), ground.decode(r.conclusion)))
                .collect(),
            meet_irreducibles: labels(meet_irreducibles(g)),
            cdim: convex_dimension(g),
            unique_atom: singletons == 1,
            unique_coatom: coatoms == 1,
            status,
            certificate,
            representation,
        }
    }

    pub fn ground(&self) -> Result<GroundSet> {
        GroundSet::new(self.n)
    }

    pub fn geometry(&self) -> Result<ConvexGeometry> {
        ConvexGeometry::from_mask(self.n, self.family_mask as u64)
    }

    pub fn representation(&self) -> Result<Option<Configuration<f64>>> {
        self.representation.as_ref().map(ConfigurationFile::to_configuration).transpose()
    }

    /// Recompute every derived field from `family_mask` and compare.
    pub fn check_derived(&self) -> Result<()> {
        let g = self.geometry()?;
        let fresh = CatalogRecord::from_geometry(self.id.clone(), &g, self.representation.clone());
        if &fresh != self {
            return Err(Error::Format(format!("record {} does not match its recomputation", self.id)));
        }
        Ok(())
    }
}

/// A representation shipped with the crate, keyed by canonical family mask.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub n: usize,
    pub family_mask: u32,
    pub configuration: ConfigurationFile,
}

/// Representations bundled with the crate.
pub fn shipped_fixtures() -> Vec<Fixture> {
    serde_json::from_str(FIXTURES_JSON).expect("bundled fixtures are valid JSON")
}

/// Conjunctive catalog filter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    #[serde(default)]
    pub unique_atom: bool,
    #[serde(default)]
    pub unique_coatom: bool,
    #[serde(default)]
    pub cdim: Option<usize>,
    #[serde(default)]
    pub iso_to: Option<u32>,
    #[serde(default)]
    pub status: Option<Status>,
}

impl FromStr for Query {
    type Err = Error;

    /// Terms separated by `,` or `&`: `unique_atom`, `unique_coatom`,
    /// `cdim=K`, `iso_to=MASK`, `status=verified|impossible|open`.
    fn from_str(s: &str) -> Result<Self> {
        let mut q = Query::default();
        for term in s.split([',', '&']).map(str::trim).filter(|t| !t.is_empty()) {
            let number = |v: &str| v.parse::<u64>().map_err(|_| Error::Query(format!("bad number in {term:?}")));
            match term.split_once('=') {
                None if term == "unique_atom" => q.unique_atom = true,
                None if term == "unique_coatom" => q.unique_coatom = true,
                Some(("cdim", v)) => q.cdim = Some(number(v)? as usize),
                Some(("iso_to", v)) => {
                    let m = number(v)?;
                    q.iso_to = Some(u32::try_from(m).map_err(|_| Error::Query(format!("mask {m} exceeds 32 bits")))?);
                }
                Some(("status", v)) => q.status = Some(v.parse()?),
                _ => return Err(Error::Query(format!("unknown term {term:?}"))),
            }
        }
        Ok(q)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    ground: GroundSet,
    records: Vec<CatalogRecord>,
    by_mask: HashMap<u32, usize>,
}

impl Catalog {
    /// Enumerate all geometries on `n` elements and attach the shipped fixtures.
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with(n, &shipped_fixtures())
    }

    pub fn build_with(n: usize, fixtures: &[Fixture]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let reps: HashMap<u32, &ConfigurationFile> = fixtures
            .iter()
            .filter(|f| f.n == n)
            .map(|f| (f.family_mask, &f.configuration))
            .collect();
        let records = enumerate_geometries(ground)?
            .into_iter()
            .enumerate()
            .map(|(k, family)| {
                let g = ConvexGeometry::new(ground, family)?;
                let rep = reps.get(&family.bits()).map(|c| (*c).clone());
                Ok(CatalogRecord::from_geometry(format!("G{n}-{}", k + 1), &g, rep))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_records(ground, records))
    }

    fn from_records(ground: GroundSet, records: Vec<CatalogRecord>) -> Self {
        let by_mask = records.iter().enumerate().map(|(i, r)| (r.family_mask, i)).collect();
        Catalog { ground, records, by_mask }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn records(&self) -> &[CatalogRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CatalogRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// The record isomorphic to `family` and a permutation `π` with
    /// `family.permute(π)` equal to the record's mask.
    pub fn find_isomorphic(&self, family: FamilyMask) -> Option<(&CatalogRecord, Vec<usize>)> {
        self.ground.check_family(family.bits() as u64).ok()?;
        let (canon, perm) = canonical_with_permutation(family, self.ground);
        self.by_mask.get(&canon.bits()).map(|&i| (&self.records[i], perm))
    }

    pub fn matches(&self, record: &CatalogRecord, q: &Query) -> bool {
        (!q.unique_atom || record.unique_atom)
            && (!q.unique_coatom || record.unique_coatom)
            && q.cdim.is_none_or(|k| record.cdim == k)
            && q.status.is_none_or(|s| record.status == s)
            && q.iso_to.is_none_or(|m| {
                self.find_isomorphic(FamilyMask(m)).is_some_and(|(r, _)| r.id == record.id)
            })
    }

    /// Ids of matching records in catalog order.
    pub fn search(&self, q: &Query) -> Result<Vec<String>> {
        if let Some(m) = q.iso_to {
            self.ground
                .check_family(m as u64)
                .map_err(|_| Error::Query(format!("mask {m} does not fit {} elements", self.ground.len())))?;
        }
        Ok(self.records.iter().filter(|r| self.matches(r, q)).map(|r| r.id.clone()).collect())
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Read records written by [`Catalog::write_jsonl`]; all must share one `n`.
    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Self> {
        let mut records = Vec::new();
        for line in input.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            records.push(serde_json::from_str::<CatalogRecord>(&line)?);
        }
        let n = records.first().map(|r| r.n).ok_or(Error::EmptyInput("catalog file has no records"))?;
        if let Some(bad) = records.iter().find(|r| r.n != n) {
            return Err(Error::Format(format!("record {} has n = {}, expected {n}", bad.id, bad.n)));
        }
        Ok(Self::from_records(GroundSet::new(n)?, records))
    }
}

/// Ground set of a convex-geometry family mask: the full set is always a
/// member and has the largest index, so the top bit fixes `n`.
pub fn family_ground(mask: u64) -> Result<GroundSet> {
    let top = 63u32.checked_sub(mask.leading_zeros());
    let n = (1..=5)
        .find(|&n| top == Some((1u32 << n) - 1))
        .ok_or(Error::NotClosureSystem(mask as u32))?;
    let ground = GroundSet::new(n)?;
    ground.check_family(mask)?;
    Ok(ground)
}

/// Parse `G{n}-{k}` into `n`.
pub fn id_ground_size(id: &str) -> Result<usize> {
    id.strip_prefix('G')
        .and_then(|rest| rest.split_once('-'))
        .and_then(|(n, k)| Some((n.parse::<usize>().ok()?, k.parse::<usize>().ok()?)))
        .map(|(n, _)| n)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}
