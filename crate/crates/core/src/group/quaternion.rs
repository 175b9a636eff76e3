use std::fmt;

use crate::error::{Error, Result};

/// `ℓ = 2^j` with `j ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupParams {
    ell: u32,
    j: u32,
}

/// `ξ^a J^b` with `a` taken mod `ℓ/2` and `b ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    a: u32,
    b: u8,
}

impl GroupElement {
    pub fn xi_exponent(&self) -> u32 {
        self.a
    }

    pub fn j_exponent(&self) -> u8 {
        self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("1"),
            (0, _) => f.write_str("J"),
            (1, 0) => f.write_str("xi"),
            (1, _) => f.write_str("xiJ"),
            (a, 0) => write!(f, "xi^{a}"),
            (a, _) => write!(f, "xi^{a}J"),
        }
    }
}

/// The whole group or one of its three non-conjugate order-4 subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupId {
    Full,
    GenI,
    GenJ,
    GenXiJ,
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgroupId::Full => "Q",
            SubgroupId::GenI => "<I>",
            SubgroupId::GenJ => "<J>",
            SubgroupId::GenXiJ => "<xiJ>",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: u32,
}

impl GroupParams {
    pub fn new(ell: u32) -> Result<Self> {
        if ell < 8 || !ell.is_power_of_two() {
            return Err(Error::InvalidParams(format!(
                "ell must be a power of two >= 8, got {ell}"
            )));
        }
        Ok(GroupParams {
            ell,
            j: ell.trailing_zeros(),
        })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Order of `ξ`, which is also the cyclotomic conductor for every
    /// character value.
    pub fn conductor(&self) -> u32 {
        self.ell / 2
    }

    fn half(&self) -> i64 {
        (self.ell / 2) as i64
    }

    fn quarter(&self) -> u32 {
        self.ell / 4
    }

    pub fn num_classes(&self) -> usize {
        (self.ell / 4 + 3) as usize
    }

    pub fn element(&self, a: i64, b: i64) -> GroupElement {
        let mut a = a;
        let mut b = b.rem_euclid(4);
        // J^2 = ξ^{ℓ/4}
        if b >= 2 {
            a += (self.ell / 4) as i64;
            b -= 2;
        }
        GroupElement {
            a: a.rem_euclid(self.half()) as u32,
            b: b as u8,
        }
    }

    pub fn identity(&self) -> GroupElement {
        self.element(0, 0)
    }

    pub fn minus_one(&self) -> GroupElement {
        self.element(self.quarter() as i64, 0)
    }

    pub fn xi(&self) -> GroupElement {
        self.element(1, 0)
    }

    pub fn j_elem(&self) -> GroupElement {
        self.element(0, 1)
    }

    /// `I = ξ^{ℓ/8}`.
    pub fn i_elem(&self) -> GroupElement {
        self.element((self.ell / 8) as i64, 0)
    }

    /// `(ξ^a J^b)(ξ^c J^d) = ξ^{a + (-1)^b c} J^{b+d}`.
    pub fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let c = if x.b == 0 { y.a as i64 } else { -(y.a as i64) };
        self.element(x.a as i64 + c, (x.b + y.b) as i64)
    }

    pub fn inverse(&self, x: GroupElement) -> GroupElement {
        if x.b == 0 {
            self.element(-(x.a as i64), 0)
        } else {
            // (ξ^a J)^2 = -1
            self.element(x.a as i64 + self.quarter() as i64, 1)
        }
    }

    pub fn pow(&self, x: GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inverse(x) } else { x };
        (0..n.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(acc, base))
    }

    pub fn conjugate(&self, g: GroupElement, by: GroupElement) -> GroupElement {
        self.mul(self.mul(by, g), self.inverse(by))
    }

    pub fn element_order(&self, g: GroupElement) -> u32 {
        let mut x = g;
        let mut n = 1;
        while !x.is_identity() {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// All `ℓ` elements: `ξ^0, …, ξ^{ℓ/2-1}, J, ξJ, …, ξ^{ℓ/2-1}J`.
    pub fn elements(&self) -> Vec<GroupElement> {
        let h = self.half();
        (0..2)
            .flat_map(|b| (0..h).map(move |a| (a, b)))
            .map(|(a, b)| self.element(a, b))
            .collect()
    }

    /// Index of the conjugacy class of `g`, matching the order of
    /// [`conjugacy_classes`](Self::conjugacy_classes).
    pub fn class_of(&self, g: GroupElement) -> usize {
        let q = self.quarter();
        if g.b == 0 {
            g.a.min(self.ell / 2 - g.a) as usize
        } else if g.a % 2 == 0 {
            (q + 1) as usize
        } else {
            (q + 2) as usize
        }
    }

    /// Representatives `1, ξ, …, ξ^{ℓ/4} = -1, J, ξJ` with class sizes.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let q = self.quarter();
        let mut out = Vec::with_capacity(self.num_classes());
        for a in 0..=q {
            out.push(ConjugacyClass {
                representative: self.element(a as i64, 0),
                size: if a == 0 || a == q { 1 } else { 2 },
            });
        }
        out.push(ConjugacyClass {
            representative: self.j_elem(),
            size: q,
        });
        out.push(ConjugacyClass {
            representative: self.element(1, 1),
            size: q,
        });
        out
    }

    pub fn subgroup_generator(&self, id: SubgroupId) -> Option<GroupElement> {
        match id {
            SubgroupId::Full => None,
            SubgroupId::GenI => Some(self.i_elem()),
            SubgroupId::GenJ => Some(self.j_elem()),
            SubgroupId::GenXiJ => Some(self.element(1, 1)),
        }
    }

    pub fn subgroup_elements(&self, id: SubgroupId) -> Vec<GroupElement> {
        match self.subgroup_generator(id) {
            None => self.elements(),
            Some(g) => (0..4).map(|n| self.pow(g, n)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(ell: u32) -> GroupParams {
        GroupParams::new(ell).unwrap()
    }

    #[test]
    fn rejects_bad_ell() {
        for ell in [0, 2, 4, 6, 12, 24] {
            assert!(matches!(GroupParams::new(ell), Err(Error::InvalidParams(_))));
        }
        assert_eq!(params(32).j(), 5);
    }

    #[test]
    fn relations_hold() {
        for ell in [8, 16, 32, 64] {
            let p = params(ell);
            let xi = p.xi();
            let j = p.j_elem();
            assert_eq!(p.element_order(xi), ell / 2);
            assert_eq!(p.mul(j, j), p.minus_one());
            assert_eq!(p.conjugate(xi, j), p.inverse(xi));
            for a in 0..(ell / 2) as i64 {
                let g = p.element(a, 1);
                assert_eq!(p.mul(g, g), p.minus_one());
            }
            assert_eq!(p.elements().len(), ell as usize);
        }
    }

    #[test]
    fn group_axioms_brute_force() {
        let p = params(16);
        let els = p.elements();
        for &x in &els {
            assert_eq!(p.mul(x, p.inverse(x)), p.identity());
            for &y in &els {
                for &z in &els {
                    assert_eq!(p.mul(p.mul(x, y), z), p.mul(x, p.mul(y, z)));
                }
            }
        }
    }

    /// Conjugacy classes found by brute-force conjugation over all elements.
    fn brute_classes(p: &GroupParams) -> Vec<Vec<GroupElement>> {
        let els = p.elements();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &g in &els {
            if seen.contains(&g) {
                continue;
            }
            let mut class: Vec<GroupElement> = els.iter().map(|&x| p.conjugate(g, x)).collect();
            class.sort();
            class.dedup();
            seen.extend(class.iter().copied());
            out.push(class);
        }
        out
    }

    #[test]
    fn classes_match_brute_force() {
        for ell in [8, 16, 32, 64] {
            let p = params(ell);
            let classes = p.conjugacy_classes();
            assert_eq!(classes.len(), (ell / 4 + 3) as usize);
            assert_eq!(classes.iter().map(|c| c.size).sum::<u32>(), ell);
            let brute = brute_classes(&p);
            assert_eq!(brute.len(), classes.len());
            for class in &brute {
                let idx = p.class_of(class[0]);
                assert!(class.iter().all(|&g| p.class_of(g) == idx));
                assert_eq!(classes[idx].size as usize, class.len());
                assert!(class.contains(&classes[idx].representative));
            }
        }
    }

    #[test]
    fn ell8_class_sizes_and_j_class() {
        let p = params(8);
        let sizes: Vec<u32> = p.conjugacy_classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 1, 2, 2]);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2, 2, 2]);
        let j_class: Vec<GroupElement> = p
            .elements()
            .into_iter()
            .filter(|&g| p.class_of(g) == p.class_of(p.j_elem()))
            .collect();
        assert_eq!(j_class, vec![p.j_elem(), p.element(2, 1)]);
        assert_eq!(params(16).conjugacy_classes().len(), 7);
    }

    #[test]
    fn order_four_subgroups() {
        for ell in [8, 16, 32] {
            let p = params(ell);
            let q = (ell / 4) as i64;
            let e = ell as i64 / 8;
            let mut got = p.subgroup_elements(SubgroupId::GenI);
            got.sort();
            let mut want = vec![p.element(0, 0), p.element(e, 0), p.element(q, 0), p.element(3 * e, 0)];
            want.sort();
            assert_eq!(got, want);
            let mut got = p.subgroup_elements(SubgroupId::GenJ);
            got.sort();
            let mut want = vec![p.identity(), p.j_elem(), p.minus_one(), p.element(q, 1)];
            want.sort();
            assert_eq!(got, want);
            let mut got = p.subgroup_elements(SubgroupId::GenXiJ);
            got.sort();
            let mut want = vec![p.identity(), p.element(1, 1), p.minus_one(), p.element(q + 1, 1)];
            want.sort();
            assert_eq!(got, want);
            for id in [SubgroupId::GenI, SubgroupId::GenJ, SubgroupId::GenXiJ] {
                assert_eq!(p.element_order(p.subgroup_generator(id).unwrap()), 4);
            }
        }
    }

    #[test]
    fn display_elements() {
        let p = params(16);
        assert_eq!(p.identity().to_string(), "1");
        assert_eq!(p.element(3, 1).to_string(), "xi^3J");
        assert_eq!(p.xi().to_string(), "xi");
    }
}
