//! Finite groups small enough to tabulate, with subgroups, left cosets and
//! group Golomb rulers.
//!
//! Elements are encoded densely as `0..|G|` with the identity at 0. Direct
//! products of cyclic groups use mixed-radix encoding with the first factor
//! most significant; permutation groups list their elements in Lehmer-code
//! order. Permutations compose left to right: `a * b` applies `a` first.

use std::fmt;

use crate::error::{Error, Result};

pub type Element = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u32),
    Product(Vec<u32>),
    Alternating(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    /// mixed-radix moduli; a cyclic group has one
    radices: Vec<u32>,
    /// permutation images, `perms[e][x]` is the image of point `x`
    perms: Vec<[u8; 4]>,
    /// full Cayley table, only for permutation groups
    table: Vec<Element>,
    inverses: Vec<Element>,
}

pub fn make_cyclic(n: u32) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnsupportedGroup("Z(0)".into()));
    }
    Ok(FiniteGroup::abelian(GroupKind::Cyclic(n), vec![n]))
}

pub fn make_product(moduli: &[u32]) -> Result<FiniteGroup> {
    if moduli.is_empty() || moduli.iter().any(|&m| m < 2) {
        return Err(Error::UnsupportedGroup(format!("product of {moduli:?}")));
    }
    let order: u64 = moduli.iter().map(|&m| m as u64).product();
    if order > 10_000 {
        return Err(Error::UnsupportedGroup(format!(
            "order {order} exceeds 10000"
        )));
    }
    if moduli.len() == 1 {
        return make_cyclic(moduli[0]);
    }
    Ok(FiniteGroup::abelian(
        GroupKind::Product(moduli.to_vec()),
        moduli.to_vec(),
    ))
}

pub fn make_alternating(degree: u8) -> Result<FiniteGroup> {
    if degree != 4 {
        return Err(Error::UnsupportedGroup(format!("A{degree}")));
    }
    let mut perms: Vec<[u8; 4]> = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    if is_permutation(&p) && is_even(&p) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    // nested loops enumerate in lexicographic = Lehmer order
    let n = perms.len();
    let index = |p: &[u8; 4]| perms.iter().position(|q| q == p).unwrap() as Element;
    let mut table = vec![0; n * n];
    let mut inverses = vec![0; n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            let prod = [
                b[a[0] as usize],
                b[a[1] as usize],
                b[a[2] as usize],
                b[a[3] as usize],
            ];
            table[i * n + j] = index(&prod);
        }
        let mut inv = [0u8; 4];
        for x in 0..4 {
            inv[a[x] as usize] = x as u8;
        }
        inverses[i] = index(&inv);
    }
    Ok(FiniteGroup {
        kind: GroupKind::Alternating(4),
        order: n,
        radices: Vec::new(),
        perms,
        table,
        inverses,
    })
}

fn is_permutation(p: &[u8; 4]) -> bool {
    let mut seen = [false; 4];
    p.iter()
        .all(|&x| !std::mem::replace(&mut seen[x as usize], true))
}

fn is_even(p: &[u8; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

impl FiniteGroup {
    fn abelian(kind: GroupKind, radices: Vec<u32>) -> FiniteGroup {
        let order = radices.iter().map(|&m| m as usize).product();
        let mut g = FiniteGroup {
            kind,
            order,
            radices,
            perms: Vec::new(),
            table: Vec::new(),
            inverses: Vec::new(),
        };
        g.inverses = (0..order as Element).map(|a| g.abelian_inv(a)).collect();
        g
    }

    /// Parses `Z(12)`, `Z(8)xZ(10)` or `A4`.
    pub fn parse(spec: &str) -> Result<FiniteGroup> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if s.eq_ignore_ascii_case("A4") {
            return make_alternating(4);
        }
        let moduli = s
            .split(['x', 'X', '*'])
            .map(|part| {
                part.strip_prefix('Z')
                    .and_then(|p| {
                        p.strip_prefix('(')
                            .and_then(|p| p.strip_suffix(')'))
                            .or(Some(p))
                    })
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| Error::UnsupportedGroup(spec.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        match moduli.as_slice() {
            [n] => make_cyclic(*n),
            _ => make_product(&moduli),
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn is_abelian(&self) -> bool {
        !matches!(self.kind, GroupKind::Alternating(_))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.order as Element
    }

    pub fn op(&self, a: Element, b: Element) -> Element {
        if !self.table.is_empty() {
            return self.table[a as usize * self.order + b as usize];
        }
        if let [n] = self.radices[..] {
            return ((a as u64 + b as u64) % n as u64) as Element;
        }
        let (mut x, mut y) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for &n in self.radices.iter().rev() {
            out += ((x % n + y % n) % n) * scale;
            scale *= n;
            x /= n;
            y /= n;
        }
        out
    }

    pub fn inv(&self, a: Element) -> Element {
        self.inverses[a as usize]
    }

    fn abelian_inv(&self, a: Element) -> Element {
        let mut x = a;
        let mut out = 0;
        let mut scale = 1;
        for &n in self.radices.iter().rev() {
            out += ((n - x % n) % n) * scale;
            scale *= n;
            x /= n;
        }
        out
    }

    /// The "difference" `a * b^-1`.
    pub fn diff(&self, a: Element, b: Element) -> Element {
        self.op(a, self.inv(b))
    }

    fn coords(&self, mut a: Element) -> Vec<u32> {
        let mut c = vec![0; self.radices.len()];
        for (slot, &n) in c.iter_mut().zip(&self.radices).rev() {
            *slot = a % n;
            a /= n;
        }
        c
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Element> {
        if coords.len() != self.radices.len() {
            return Err(Error::InvalidElement(format!("{coords:?}")));
        }
        let mut out = 0;
        for (&c, &n) in coords.iter().zip(&self.radices) {
            out = out * n + c % n;
        }
        Ok(out)
    }

    /// Parses an element literal: `5` in a cyclic group, `(2,7)` in a
    /// product, cycle notation such as `(12)(34)` or `id` in `A4`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        let bad = || Error::InvalidElement(s.to_string());
        match &self.kind {
            GroupKind::Cyclic(n) => {
                let t = s.trim_start_matches('(').trim_end_matches(')');
                let x: i64 = t.trim().parse().map_err(|_| bad())?;
                Ok(x.rem_euclid(*n as i64) as Element)
            }
            GroupKind::Product(_) => {
                let t = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let coords = t
                    .split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                self.from_coords(&coords)
            }
            GroupKind::Alternating(_) => {
                let mut perm = [0u8, 1, 2, 3];
                if !(s == "id" || s == "e" || s == "()") {
                    // cycles are applied left to right, matching op()
                    let mut rest = s;
                    while !rest.is_empty() {
                        let body_end = rest.find(')').ok_or_else(bad)?;
                        let body = rest.strip_prefix('(').ok_or_else(bad)?;
                        let points: Vec<u8> = body[..body_end - 1]
                            .chars()
                            .filter(|c| *c != ',' && !c.is_whitespace())
                            .map(|c| match c.to_digit(10) {
                                Some(d @ 1..=4) => Ok(d as u8 - 1),
                                _ => Err(bad()),
                            })
                            .collect::<Result<_>>()?;
                        let mut cycle = [0u8, 1, 2, 3];
                        for (i, &p) in points.iter().enumerate() {
                            cycle[p as usize] = points[(i + 1) % points.len()];
                        }
                        perm = [
                            cycle[perm[0] as usize],
                            cycle[perm[1] as usize],
                            cycle[perm[2] as usize],
                            cycle[perm[3] as usize],
                        ];
                        rest = rest[body_end + 1..].trim_start();
                    }
                }
                if !is_permutation(&perm) {
                    return Err(bad());
                }
                self.perms
                    .iter()
                    .position(|q| *q == perm)
                    .map(|i| i as Element)
                    .ok_or_else(bad)
            }
        }
    }

    pub fn format_element(&self, a: Element) -> String {
        match &self.kind {
            GroupKind::Cyclic(_) => a.to_string(),
            GroupKind::Product(_) => {
                let c: Vec<String> = self.coords(a).iter().map(|x| x.to_string()).collect();
                format!("({})", c.join(","))
            }
            GroupKind::Alternating(_) => {
                let p = self.perms[a as usize];
                let mut seen = [false; 4];
                let mut out = String::new();
                for start in 0..4 {
                    if seen[start] || p[start] as usize == start {
                        continue;
                    }
                    out.push('(');
                    let mut x = start;
                    while !seen[x] {
                        seen[x] = true;
                        out.push(char::from(b'1' + x as u8));
                        x = p[x] as usize;
                    }
                    out.push(')');
                }
                if out.is_empty() {
                    out.push_str("id");
                }
                out
            }
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic(n) => write!(f, "Z({n})"),
            GroupKind::Product(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| format!("Z({m})")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupKind::Alternating(d) => write!(f, "A{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<Element>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// The subgroup generated by `gens` (the trivial subgroup when empty).
    pub fn generated(group: &FiniteGroup, gens: &[Element]) -> Result<Subgroup> {
        if let Some(&g) = gens.iter().find(|&&g| g as usize >= group.order()) {
            return Err(Error::InvalidElement(g.to_string()));
        }
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let b = group.op(a, g);
                if !mask[b as usize] {
                    mask[b as usize] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Ok(Subgroup {
            group: group.clone(),
            members,
            mask,
        })
    }

    /// Validates an explicit member list.
    pub fn from_members(group: &FiniteGroup, members: &[Element]) -> Result<Subgroup> {
        let h = Subgroup::generated(group, members)?;
        if h.members.len() != {
            let mut m = members.to_vec();
            m.sort_unstable();
            m.dedup();
            if !m.contains(&0) {
                m.push(0);
            }
            m.len()
        } {
            return Err(Error::InvalidElement("member list is not closed".into()));
        }
        Ok(h)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, a: Element) -> bool {
        self.mask.get(a as usize).copied().unwrap_or(false)
    }

    /// Left cosets `gH`, each sorted, listed by increasing least element.
    pub fn left_cosets(&self) -> Vec<Vec<Element>> {
        let g = &self.group;
        let mut assigned = vec![false; g.order()];
        let mut cosets = Vec::with_capacity(self.index());
        for a in g.elements() {
            if assigned[a as usize] {
                continue;
            }
            let mut coset: Vec<Element> = self.members.iter().map(|&h| g.op(a, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                assigned[x as usize] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// Right cosets `Hg`, each sorted, listed by increasing least element.
    pub fn right_cosets(&self) -> Vec<Vec<Element>> {
        let g = &self.group;
        let mut assigned = vec![false; g.order()];
        let mut cosets = Vec::with_capacity(self.index());
        for a in g.elements() {
            if assigned[a as usize] {
                continue;
            }
            let mut coset: Vec<Element> = self.members.iter().map(|&h| g.op(h, a)).collect();
            coset.sort_unstable();
            for &x in &coset {
                assigned[x as usize] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// `coset_index[a]` = position of `aH` in [`Subgroup::left_cosets`].
    pub fn left_coset_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.group.order()];
        for (i, coset) in self.left_cosets().iter().enumerate() {
            for &x in coset {
                idx[x as usize] = i;
            }
        }
        idx
    }
}

pub fn left_cosets(h: &Subgroup) -> Vec<Vec<Element>> {
    h.left_cosets()
}

/// A candidate `(G, H)` group Golomb ruler: `|G|/|H|` elements of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRuler {
    subgroup: Subgroup,
    marks: Vec<Element>,
}

impl GroupRuler {
    pub fn new(subgroup: &Subgroup, marks: &[Element]) -> Result<GroupRuler> {
        let expected = subgroup.index();
        let mut marks = marks.to_vec();
        marks.sort_unstable();
        marks.dedup();
        if marks.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                got: marks.len(),
            });
        }
        if let Some(&m) = marks
            .iter()
            .find(|&&m| m as usize >= subgroup.group().order())
        {
            return Err(Error::InvalidElement(m.to_string()));
        }
        Ok(GroupRuler {
            subgroup: subgroup.clone(),
            marks,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.subgroup.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn marks(&self) -> &[Element] {
        &self.marks
    }

    /// `x * y^-1` over all ordered pairs `x != y`.
    pub fn differences(&self) -> Vec<Element> {
        let g = self.group();
        let mut out = Vec::with_capacity(self.marks.len() * self.marks.len());
        for &x in &self.marks {
            for &y in &self.marks {
                if x != y {
                    out.push(g.diff(x, y));
                }
            }
        }
        out
    }

    pub fn has_distinct_differences(&self) -> bool {
        let mut seen = vec![false; self.group().order()];
        self.differences()
            .into_iter()
            .all(|d| !std::mem::replace(&mut seen[d as usize], true))
    }

    pub fn is_left_transversal(&self) -> bool {
        let idx = self.subgroup.left_coset_index();
        let mut seen = vec![false; self.subgroup.index()];
        self.marks
            .iter()
            .all(|&x| !std::mem::replace(&mut seen[idx[x as usize]], true))
    }

    pub fn is_ggr(&self) -> bool {
        self.has_distinct_differences() && self.is_left_transversal()
    }
}

pub fn is_ggr(x: &GroupRuler) -> bool {
    x.is_ggr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &FiniteGroup) {
        let n = g.order() as Element;
        for a in 0..n {
            assert_eq!(g.op(a, 0), a);
            assert_eq!(g.op(0, a), a);
            assert_eq!(g.op(a, g.inv(a)), 0);
            assert_eq!(g.op(g.inv(a), a), 0);
        }
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        for g in [
            make_cyclic(1).unwrap(),
            make_cyclic(12).unwrap(),
            make_product(&[2, 6]).unwrap(),
            make_product(&[8, 10]).unwrap(),
            make_alternating(4).unwrap(),
        ] {
            check_axioms(&g);
        }
    }

    #[test]
    fn construction_and_parsing() {
        assert_eq!(make_product(&[8, 10]).unwrap().order(), 80);
        assert_eq!(make_cyclic(1).unwrap().order(), 1);
        assert_eq!(make_alternating(4).unwrap().order(), 12);
        assert!(make_alternating(5).is_err());
        assert!(make_product(&[1, 4]).is_err());
        assert_eq!(
            FiniteGroup::parse("Z(12)").unwrap(),
            make_cyclic(12).unwrap()
        );
        let g = FiniteGroup::parse("Z(8)xZ(10)").unwrap();
        assert_eq!(g.to_string(), "Z(8)xZ(10)");
        assert_eq!(g.parse_element("(5,1)").unwrap(), 51);
        assert_eq!(g.format_element(51), "(5,1)");
        assert!(FiniteGroup::parse("S4").is_err());
    }

    #[test]
    fn a4_contains_klein_subgroup() {
        let g = make_alternating(4).unwrap();
        let gens: Vec<Element> = ["(12)(34)", "(13)(24)"]
            .iter()
            .map(|s| g.parse_element(s).unwrap())
            .collect();
        let h = Subgroup::generated(&g, &gens).unwrap();
        assert_eq!(h.order(), 4);
        let mut names: Vec<String> = h.members().iter().map(|&e| g.format_element(e)).collect();
        names.sort();
        assert_eq!(names, vec!["(12)(34)", "(13)(24)", "(14)(23)", "id"]);
        let cosets = h.left_cosets();
        assert_eq!(cosets.len(), 3);
        assert!(cosets.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn cycle_notation_round_trips() {
        let g = make_alternating(4).unwrap();
        for a in g.elements() {
            assert_eq!(g.parse_element(&g.format_element(a)).unwrap(), a);
        }
        assert!(g.parse_element("(12)").is_err());
    }

    #[test]
    fn cyclic_cosets() {
        let g = make_cyclic(6).unwrap();
        let h = Subgroup::generated(&g, &[3]).unwrap();
        assert_eq!(h.left_cosets(), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn product_cosets() {
        let g = make_product(&[8, 10]).unwrap();
        let gens = [
            g.parse_element("(4,0)").unwrap(),
            g.parse_element("(0,2)").unwrap(),
        ];
        let h = Subgroup::generated(&g, &gens).unwrap();
        assert_eq!(h.order(), 10);
        let cosets = h.left_cosets();
        assert_eq!(cosets.len(), 8);
        let mut all: Vec<Element> = cosets.concat();
        all.sort_unstable();
        assert_eq!(all, (0..80).collect::<Vec<_>>());
    }

    #[test]
    fn product_group_ggr_examples() {
        let g = make_product(&[8, 10]).unwrap();
        let gens = [
            g.parse_element("(4,0)").unwrap(),
            g.parse_element("(0,2)").unwrap(),
        ];
        let h = Subgroup::generated(&g, &gens).unwrap();
        let x: Vec<Element> = [
            "(0,0)", "(0,1)", "(1,0)", "(5,1)", "(2,4)", "(2,7)", "(3,2)", "(7,9)",
        ]
        .iter()
        .map(|s| g.parse_element(s).unwrap())
        .collect();
        assert!(GroupRuler::new(&h, &x).unwrap().is_ggr());

        let a4 = make_alternating(4).unwrap();
        let gens = [
            a4.parse_element("(12)(34)").unwrap(),
            a4.parse_element("(13)(24)").unwrap(),
        ];
        let klein = Subgroup::generated(&a4, &gens).unwrap();
        let x: Vec<Element> = ["id", "(123)", "(124)"]
            .iter()
            .map(|s| a4.parse_element(s).unwrap())
            .collect();
        let gr = GroupRuler::new(&klein, &x).unwrap();
        assert!(gr.is_ggr());
        let mut diffs: Vec<String> = gr
            .differences()
            .iter()
            .map(|&d| a4.format_element(d))
            .collect();
        diffs.sort();
        assert_eq!(
            diffs,
            vec!["(123)", "(124)", "(132)", "(142)", "(234)", "(243)"]
        );
    }

    #[test]
    fn size_mismatch() {
        let g = make_cyclic(12).unwrap();
        let h = Subgroup::generated(&g, &[3]).unwrap();
        assert_eq!(
            GroupRuler::new(&h, &[0, 1]).unwrap_err(),
            Error::SizeMismatch {
                expected: 3,
                got: 2
            }
        );
        assert!(GroupRuler::new(&h, &[0, 1, 5]).unwrap().is_ggr());
    }

    #[test]
    fn subgroup_from_members_validates_closure() {
        let g = make_cyclic(12).unwrap();
        assert!(Subgroup::from_members(&g, &[0, 3, 6, 9]).is_ok());
        assert!(Subgroup::from_members(&g, &[0, 3]).is_err());
    }
}
