//! Line-oriented group catalogs and the builtin catalog.
//!
//! One JSON object per line:
//!
//! ```text
//! {"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]],"tags":["symmetric"]}
//! ```
//!
//! Blank lines and lines starting with `#` are skipped.

use serde::{Deserialize, Serialize};

use crate::constructions::{affine_frobenius, agl1, gamma_tower, Family};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub degree: usize,
    /// Image arrays, 0-based.
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

impl GroupRecord {
    pub fn from_group(name: &str, group: &PermGroup, tags: &[&str]) -> Self {
        GroupRecord {
            name: name.to_string(),
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| g.images().to_vec())
                .collect(),
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        if self.generators.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let gens = self
            .generators
            .iter()
            .map(|images| {
                if images.len() != self.degree {
                    return Err(Error::DegreeMismatch {
                        left: self.degree,
                        right: images.len(),
                    });
                }
                Permutation::from_images(images.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(gens)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// A line that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogLineError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

/// One entry per non-blank, non-comment line, in file order. Records that
/// parse but do not describe a valid group are reported as errors too, as
/// are repeated names.
pub fn parse_catalog(text: &str) -> Vec<std::result::Result<GroupRecord, CatalogLineError>> {
    let mut names = std::collections::HashSet::new();
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            let err = |message: String| CatalogLineError {
                line: i + 1,
                message,
            };
            let rec: GroupRecord = serde_json::from_str(l).map_err(|e| err(e.to_string()))?;
            rec.to_group().map_err(|e| err(e.to_string()))?;
            if !names.insert(rec.name.clone()) {
                return Err(err(format!("duplicate name {:?}", rec.name)));
            }
            Ok(rec)
        })
        .collect()
}

pub fn write_catalog(records: &[GroupRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug)]
pub struct BuiltinEntry {
    pub name: String,
    pub tags: Vec<&'static str>,
    pub group: PermGroup,
}

impl BuiltinEntry {
    pub fn record(&self) -> GroupRecord {
        GroupRecord::from_group(&self.name, &self.group, &self.tags)
    }
}

fn entry(name: impl Into<String>, tags: &[&'static str], group: PermGroup) -> BuiltinEntry {
    BuiltinEntry {
        name: name.into(),
        tags: tags.to_vec(),
        group,
    }
}

fn build(f: Family) -> PermGroup {
    f.build().expect("builtin family parameters are valid")
}

fn direct(a: Family, b: Family) -> PermGroup {
    build(Family::Direct(Box::new(a), Box::new(b)))
}

/// The builtin catalog, in a fixed order. Every group has order at most 5000.
pub fn builtin_catalog() -> Vec<BuiltinEntry> {
    let mut out = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 30] {
        out.push(entry(
            format!("C{n}"),
            &["cyclic"],
            build(Family::Cyclic(n)),
        ));
    }
    for n in 3..=6 {
        out.push(entry(
            format!("S{n}"),
            &["symmetric"],
            build(Family::Symmetric(n)),
        ));
    }
    out.push(entry(
        "A4",
        &["alternating", "frobenius"],
        build(Family::Alternating(4)),
    ));
    out.push(entry(
        "A5",
        &["alternating", "nonsolvable"],
        build(Family::Alternating(5)),
    ));
    for n in [3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 32] {
        out.push(entry(
            format!("D{}", 2 * n),
            &["dihedral"],
            build(Family::Dihedral(n)),
        ));
    }
    for (p, rank) in [(2u64, 2usize), (2, 3), (3, 2), (5, 2)] {
        out.push(entry(
            format!("E{}", p.pow(rank as u32)),
            &["elementary-abelian", "p-group"],
            build(Family::ElementaryAbelian { p, rank }),
        ));
    }
    out.push(entry(
        "Q8",
        &["p-group"],
        build(Family::Quaternion { n: 3 }),
    ));
    out.push(entry(
        "Q16",
        &["p-group"],
        build(Family::Quaternion { n: 4 }),
    ));
    out.push(entry(
        "SD16",
        &["p-group"],
        build(Family::Semidihedral { n: 4 }),
    ));
    for (p, exponent_p) in [(3, true), (3, false), (5, true), (5, false), (7, true)] {
        let e = if exponent_p { p } else { p * p };
        out.push(entry(
            format!("{p}^(1+2):exp{e}"),
            &["extraspecial", "p-group"],
            build(Family::Extraspecial { p, exponent_p }),
        ));
    }
    for (p, k) in [
        (3u64, 1usize),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (11, 1),
        (13, 1),
        (2, 4),
        (17, 1),
        (19, 1),
        (23, 1),
        (5, 2),
        (3, 3),
    ] {
        let q = p.pow(k as u32);
        out.push(entry(
            format!("AGL(1,{q})"),
            &["affine", "frobenius"],
            agl1(p, k).expect("prime power"),
        ));
    }
    out.push(entry(
        "F21",
        &["frobenius"],
        build(Family::AffineMod { n: 7, a: 2 }),
    ));
    out.push(entry(
        "F39",
        &["frobenius"],
        build(Family::AffineMod { n: 13, a: 3 }),
    ));
    out.push(entry(
        "F55",
        &["frobenius"],
        build(Family::AffineMod { n: 11, a: 3 }),
    ));
    out.push(entry(
        "F80",
        &["frobenius"],
        affine_frobenius(2, 4, 5).expect("5 divides 15"),
    ));
    out.push(entry(
        "F75",
        &["frobenius"],
        affine_frobenius(5, 2, 3).expect("3 divides 24"),
    ));
    out.push(entry(
        "C2xS3",
        &["direct"],
        direct(Family::Cyclic(2), Family::Symmetric(3)),
    ));
    out.push(entry(
        "S3xS3",
        &["direct"],
        direct(Family::Symmetric(3), Family::Symmetric(3)),
    ));
    out.push(entry(
        "C3xA4",
        &["direct"],
        direct(Family::Cyclic(3), Family::Alternating(4)),
    ));
    out.push(entry(
        "C2xD8",
        &["direct", "p-group"],
        direct(Family::Cyclic(2), Family::Dihedral(4)),
    ));
    out.push(entry(
        "C2xQ8",
        &["direct", "p-group"],
        direct(Family::Cyclic(2), Family::Quaternion { n: 3 }),
    ));
    let tower = gamma_tower();
    out.push(entry("gamma0", &["frobenius", "gf27"], tower.gamma0));
    out.push(entry("gamma", &["gf27"], tower.gamma));
    out
}

/// Looks up a builtin by name, ignoring ASCII case. `Gamma` and `Gamma0`
/// are accepted alongside the catalog names.
pub fn builtin(name: &str) -> Result<PermGroup> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| e.group)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn builtin_catalog_shape() {
        let cat = builtin_catalog();
        assert!(cat.len() >= 40);
        let names: HashSet<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), cat.len(), "names are unique");
        for e in &cat {
            assert!(e.group.order() <= 5000, "{}", e.name);
        }
        for required in [
            "S3",
            "S6",
            "D64",
            "AGL(1,27)",
            "5^(1+2):exp5",
            "7^(1+2):exp7",
            "gamma",
        ] {
            assert!(names.contains(required), "{required}");
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(builtin("s3").unwrap().order(), 6);
        assert_eq!(builtin("Gamma").unwrap().order(), 1053);
        assert_eq!(
            builtin("nope").unwrap_err(),
            Error::UnknownGroup("nope".into())
        );
    }

    #[test]
    fn record_lines() {
        let g = builtin("S3").unwrap();
        let rec = GroupRecord::from_group("S3", &g, &["symmetric"]);
        let line = rec.to_line();
        assert_eq!(
            line,
            r#"{"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]],"tags":["symmetric"]}"#
        );
        let parsed = parse_catalog(&format!("# comment\n\n{line}\n"));
        assert_eq!(parsed, vec![Ok(rec.clone())]);
        assert_eq!(parsed[0].as_ref().unwrap().to_group().unwrap().order(), 6);
        assert_eq!(write_catalog(&[rec]), format!("{line}\n"));
    }

    #[test]
    fn malformed_lines_are_reported() {
        let text = concat!(
            r#"{"name":"ok","degree":2,"generators":[[1,0]]}"#,
            "\n",
            r#"{"name":"bad","degree":3,"generators":[[0,0,1]]}"#,
            "\n",
            "not json\n",
            r#"{"name":"short","degree":3,"generators":[[1,0]]}"#,
            "\n",
            r#"{"name":"ok","degree":1,"generators":[]}"#,
            "\n",
        );
        let parsed = parse_catalog(text);
        assert_eq!(parsed.len(), 5);
        assert!(parsed[0].is_ok());
        let lines: Vec<usize> = parsed
            .iter()
            .filter_map(|r| r.as_ref().err().map(|e| e.line))
            .collect();
        assert_eq!(lines, vec![2, 3, 4, 5]);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let rec: GroupRecord =
            serde_json::from_str(r#"{"name":"one","degree":4,"generators":[]}"#).unwrap();
        assert_eq!(rec.to_group().unwrap().order(), 1);
    }
}
