//! Parsing of command-line values and input files.

use std::fs;
use std::io::Read;

use rgrkit::configurations::{Configuration, ConfigurationFile, Resolution};
use rgrkit::groups::{Element, FiniteGroup, GroupRuler, Subgroup};

use crate::Failure;

/// Comma-separated integers, spaces allowed.
pub fn int_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Failure::usage(format!("not an integer: {t:?}")))
        })
        .collect()
}

pub fn residue_list(s: &str) -> Result<Vec<u64>, Failure> {
    int_list(s)?
        .into_iter()
        .map(|x| u64::try_from(x).map_err(|_| Failure::usage(format!("negative residue {x}"))))
        .collect()
}

/// Base blocks separated by `;`.
pub fn block_list(s: &str) -> Result<Vec<Vec<u64>>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(residue_list)
        .collect()
}

/// Group elements separated by `;`, so that tuples like `(1,2)` survive.
pub fn elements(g: &FiniteGroup, s: &str) -> Result<Vec<Element>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| g.parse_element(t).map_err(Failure::from))
        .collect()
}

pub fn subgroup(g: &FiniteGroup, gens: &str) -> Result<Subgroup, Failure> {
    Ok(Subgroup::generated(g, &elements(g, gens)?)?)
}

pub fn group_ruler(group: &str, gens: &str, marks: &str) -> Result<GroupRuler, Failure> {
    let g = FiniteGroup::parse(group)?;
    let h = subgroup(&g, gens)?;
    let x = elements(&g, marks)?;
    Ok(GroupRuler::new(&h, &x)?)
}

pub fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}")))
    }
}

pub fn configuration(path: &str) -> Result<(Configuration, Option<Resolution>), Failure> {
    let text = read_input(path)?;
    let file: ConfigurationFile =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    Ok(file.into_parts()?)
}

pub fn resolved_configuration(path: &str) -> Result<(Configuration, Resolution), Failure> {
    match configuration(path)? {
        (c, Some(r)) => Ok((c, r)),
        (_, None) => Err(Failure::usage(format!("{path} has no \"classes\""))),
    }
}
