//! Eta matrices and the groups `KSp(M^{4ν-1}(Q_ℓ, ν·γ₁))` and
//! `ko_{4k-1}(BQ_ℓ)`.
//!
//! Both groups are computed as the subgroup of `(Q/2Z)^n` spanned by the
//! rows of an eta matrix: rows are generators (virtual bundles over the
//! space form, or manifolds mapping to `BQ_ℓ`), columns are twisting
//! characters. Each matrix is block diagonal with a 2×2 block from the
//! `Θ` twists and a square block from the `Δ^i` twists.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{quotient_group, AbelianGroup, Rational, ResidueMod2Z};
use crate::error::{Error, Result};
use crate::eta::{eta_lens_difference, eta_pair, LensPair, SpaceForm};
use crate::group::{c_constant, delta_power, theta, FpfRep, GroupParams, SubgroupId, VirtualCharacter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Exact eta values before reduction.
    pub exact: Vec<Vec<Rational>>,
    pub entries: Vec<Vec<ResidueMod2Z>>,
}

impl EtaMatrix {
    fn from_exact(row_labels: Vec<String>, col_labels: Vec<String>, exact: Vec<Vec<Rational>>) -> Self {
        let entries = exact
            .iter()
            .map(|r| r.iter().cloned().map(ResidueMod2Z::new).collect())
            .collect();
        EtaMatrix {
            row_labels,
            col_labels,
            exact,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &ResidueMod2Z {
        &self.entries[i][j]
    }

    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> EtaMatrix {
        let exact = self.exact[rows.clone()]
            .iter()
            .map(|r| r[cols.clone()].to_vec())
            .collect();
        EtaMatrix::from_exact(
            self.row_labels[rows].to_vec(),
            self.col_labels[cols].to_vec(),
            exact,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ResidueMod2Z::is_zero)
    }

    /// Subgroup of `(Q/2Z)^{cols}` spanned by the rows.
    pub fn row_span(&self) -> Result<AbelianGroup> {
        let rows: Vec<Vec<Rational>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.rep().clone()).collect())
            .collect();
        quotient_group(self.cols(), &rows)
    }
}

impl fmt::Display for EtaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let label_w = self.row_labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(self.col_labels[j].chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (l, w) in self.col_labels.iter().zip(&widths) {
            write!(f, "  {l:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in self.row_labels.iter().zip(&cells) {
            write!(f, "{label:label_w$}")?;
            for (c, w) in row.iter().zip(&widths) {
                write!(f, "  {c:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A labelled multiple of `Θ₁`, `Θ₂` or `Δ^i`.
#[derive(Clone, Debug)]
pub struct Twist {
    pub label: String,
    pub character: VirtualCharacter,
}

fn labelled(coeff: i64, name: &str) -> String {
    if coeff == 1 {
        name.to_string()
    } else {
        format!("{coeff}{name}")
    }
}

fn theta_twist(coeff: i64, i: u8, params: GroupParams) -> Result<Twist> {
    Ok(Twist {
        label: labelled(coeff, &format!("Theta{i}")),
        character: theta(i, params)?.scale(coeff),
    })
}

fn delta_twist(coeff: i64, r: u32, params: GroupParams) -> Result<Twist> {
    Ok(Twist {
        label: labelled(coeff, &format!("Delta^{r}")),
        character: delta_power(r, params)?.scale(coeff),
    })
}

/// `ε_{2i} = 2`, `ε_{2i-1} = 1`.
pub fn epsilon(i: usize) -> i64 {
    if i % 2 == 0 {
        2
    } else {
        1
    }
}

/// Coefficient on `Δ^j` among the KSp twists. For `ν` odd this is `ε_j`;
/// for `ν` even the parities are swapped.
fn ksp_delta_coeff(nu: usize, j: usize) -> i64 {
    if nu % 2 == 0 {
        3 - epsilon(j)
    } else {
        epsilon(j)
    }
}

/// Twisting characters for `KSp(M^{4ν-1})`:
/// `(Θ₁, Θ₂, 2Δ, Δ², …, 2Δ^{ν-1})` for `ν` even and
/// `(2Θ₁, 2Θ₂, Δ, 2Δ², …, 2Δ^{ν-1})` for `ν` odd.
pub fn ksp_twists(nu: usize, params: GroupParams) -> Result<Vec<Twist>> {
    let tc = if nu % 2 == 0 { 1 } else { 2 };
    let mut out = vec![theta_twist(tc, 1, params)?, theta_twist(tc, 2, params)?];
    for j in 1..nu {
        out.push(delta_twist(ksp_delta_coeff(nu, j), j as u32, params)?);
    }
    Ok(out)
}

/// Virtual bundles `2Θ₁, 2Θ₂, Δ, 2Δ², …, ε_{ν-1}Δ^{ν-1}`.
pub fn ksp_generators(nu: usize, params: GroupParams) -> Result<Vec<Twist>> {
    let mut out = vec![theta_twist(2, 1, params)?, theta_twist(2, 2, params)?];
    for i in 1..nu {
        out.push(delta_twist(epsilon(i), i as u32, params)?);
    }
    Ok(out)
}

/// Twisting characters for `ko_{4k-1}(BQ_ℓ)`, with parities reversed
/// relative to [`ksp_twists`] at `ν = k`:
/// `(2Θ₁, 2Θ₂, Δ, 2Δ², …, 2Δ^k)` for `k` even and
/// `(Θ₁, Θ₂, 2Δ, Δ², …, 2Δ^k)` for `k` odd.
pub fn ko_twists(k: usize, params: GroupParams) -> Result<Vec<Twist>> {
    let tc = if k % 2 == 0 { 2 } else { 1 };
    let mut out = vec![theta_twist(tc, 1, params)?, theta_twist(tc, 2, params)?];
    for j in 1..=k {
        let c = if k % 2 == 0 { epsilon(j) } else { 3 - epsilon(j) };
        out.push(delta_twist(c, j as u32, params)?);
    }
    Ok(out)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_string()))
    }
}

/// Full `(ν+1) × (ν+1)` eta matrix of the KSp generators on
/// `M^{4ν-1}(Q_ℓ, ν·γ₁)`.
pub fn ksp_eta_matrix(nu: usize, params: GroupParams) -> Result<EtaMatrix> {
    require(nu >= 2, "nu must be >= 2")?;
    let space = SpaceForm::quaternion(params, nu)?;
    let rows = ksp_generators(nu, params)?;
    let cols = ksp_twists(nu, params)?;
    let mut exact = Vec::with_capacity(rows.len());
    for r in &rows {
        let mut line = Vec::with_capacity(cols.len());
        for c in &cols {
            line.push(eta_pair(&space, &c.character, Some(&r.character))?.exact);
        }
        exact.push(line);
    }
    Ok(EtaMatrix::from_exact(
        rows.into_iter().map(|t| t.label).collect(),
        cols.into_iter().map(|t| t.label).collect(),
        exact,
    ))
}

/// Manifold generators of `ko_{4k-1}(BQ_ℓ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoGenerator {
    Lens(LensPair),
    /// `M_Q^{4k-1-4μ} × Z^{4μ}`
    Quaternion { mu: usize },
}

pub fn ko_generators(k: usize) -> Vec<KoGenerator> {
    let mut out = vec![
        KoGenerator::Lens(LensPair::IMinusJ),
        KoGenerator::Lens(LensPair::IMinusXiJ),
    ];
    out.extend((0..k).map(|mu| KoGenerator::Quaternion { mu }));
    out
}

fn ko_generator_label(g: KoGenerator, k: usize) -> String {
    match g {
        KoGenerator::Lens(pair) => pair.label(k),
        KoGenerator::Quaternion { mu: 0 } => format!("M_Q^{}", 4 * k - 1),
        KoGenerator::Quaternion { mu } => format!("M_Q^{}xZ^{}", 4 * (k - mu) - 1, 4 * mu),
    }
}

fn ko_entry(g: KoGenerator, k: usize, sigma: &VirtualCharacter, params: GroupParams) -> Result<Rational> {
    match g {
        KoGenerator::Lens(pair) => Ok(eta_lens_difference(pair, k, sigma, params)?.exact),
        KoGenerator::Quaternion { mu } => {
            let tau = FpfRep::multiple_of_gamma1(params, k - mu)?;
            let space = SpaceForm::new(SubgroupId::Full, tau, mu as u32);
            Ok(eta_pair(&space, sigma, None)?.exact)
        }
    }
}

/// Full `(k+2) × (k+2)` eta matrix of the manifold generators.
pub fn ko_eta_matrix(k: usize, params: GroupParams) -> Result<EtaMatrix> {
    require(k >= 1, "k must be >= 1")?;
    let rows = ko_generators(k);
    let cols = ko_twists(k, params)?;
    let mut exact = Vec::with_capacity(rows.len());
    for &r in &rows {
        let mut line = Vec::with_capacity(cols.len());
        for c in &cols {
            line.push(ko_entry(r, k, &c.character, params)?);
        }
        exact.push(line);
    }
    Ok(EtaMatrix::from_exact(
        rows.into_iter().map(|g| ko_generator_label(g, k)).collect(),
        cols.into_iter().map(|t| t.label).collect(),
        exact,
    ))
}

fn two_pow(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^{1-ν}` (ν even) or `2^{2-ν}` (ν odd) times
/// `[[2^{j-3}+1, 2^{j-3}], [2^{j-3}, 2^{j-3}+1]]`.
pub fn a_closed_form(nu: usize, params: GroupParams) -> [[Rational; 2]; 2] {
    let s = if nu % 2 == 0 { two_pow(1 - nu as i64) } else { two_pow(2 - nu as i64) };
    symmetric_block(&s, params)
}

fn symmetric_block(scale: &Rational, params: GroupParams) -> [[Rational; 2]; 2] {
    let a = two_pow(params.j() as i64 - 3);
    let d = scale * (&a + int(1));
    let o = scale * &a;
    [[d.clone(), o.clone()], [o, d]]
}

/// The `Δ` block: `ε_i · δ_j · c_{i+j-ν}` on and above the antidiagonal
/// (`i + j ≤ ν`), zero below it.
pub fn b_closed_form(nu: usize, params: GroupParams) -> Vec<Vec<ResidueMod2Z>> {
    (1..nu)
        .map(|i| {
            (1..nu)
                .map(|j| {
                    if i + j > nu {
                        ResidueMod2Z::zero()
                    } else {
                        let coeff = epsilon(i) * ksp_delta_coeff(nu, j);
                        let c = c_constant(i as i64 + j as i64 - nu as i64, params);
                        ResidueMod2Z::new(c * int(coeff))
                    }
                })
                .collect()
        })
        .collect()
}

/// Printed lens-space block: `2^{1-k}` (k even) or `2^{-k}` (k odd) times
/// `[[2,1],[1,2]]` for `ℓ = 8` and times the identity for `ℓ > 8`.
pub fn c_closed_form(k: usize, params: GroupParams) -> [[Rational; 2]; 2] {
    let s = if k % 2 == 0 { two_pow(1 - k as i64) } else { two_pow(-(k as i64)) };
    if params.ell() == 8 {
        [[&s * int(2), s.clone()], [s.clone(), &s * int(2)]]
    } else {
        [[s.clone(), Rational::zero()], [Rational::zero(), s]]
    }
}

fn same_residues_2x2(block: &EtaMatrix, expect: &[[Rational; 2]; 2]) -> bool {
    (0..2).all(|i| (0..2).all(|j| block.get(i, j) == &ResidueMod2Z::new(expect[i][j].clone())))
}

fn span_of_2x2(m: &[[Rational; 2]; 2]) -> Result<AbelianGroup> {
    quotient_group(2, &[m[0].to_vec(), m[1].to_vec()])
}

fn mismatch(what: String) -> Error {
    Error::StructureMismatch(what)
}

fn check_a(block: &EtaMatrix, nu: usize, params: GroupParams) -> Result<()> {
    if same_residues_2x2(block, &a_closed_form(nu, params)) {
        Ok(())
    } else {
        Err(mismatch(format!("A block for ell {} nu {nu} differs from its closed form", params.ell())))
    }
}

fn check_b(block: &EtaMatrix, nu: usize, params: GroupParams) -> Result<()> {
    if block.entries == b_closed_form(nu, params) {
        Ok(())
    } else {
        Err(mismatch(format!("B block for ell {} nu {nu} differs from the c-constant pattern", params.ell())))
    }
}

fn check_c(block: &EtaMatrix, k: usize, params: GroupParams) -> Result<()> {
    let printed = c_closed_form(k, params);
    let ok = if params.ell() == 8 {
        same_residues_2x2(block, &printed)
    } else {
        // rows agree only up to a change of basis for ℓ > 8
        block.row_span()? == span_of_2x2(&printed)?
    };
    if ok {
        Ok(())
    } else {
        Err(mismatch(format!("C block for ell {} k {k} differs from its printed form", params.ell())))
    }
}

/// The `Θ` block of the KSp eta matrix, checked against its closed form.
pub fn matrix_a(nu: usize, params: GroupParams) -> Result<EtaMatrix> {
    let block = ksp_eta_matrix(nu, params)?.block(0..2, 0..2);
    check_a(&block, nu, params)?;
    Ok(block)
}

/// The `(ν-1) × (ν-1)` `Δ` block of the KSp eta matrix, checked against the
/// c-constant pattern.
pub fn matrix_b(nu: usize, params: GroupParams) -> Result<EtaMatrix> {
    let block = ksp_eta_matrix(nu, params)?.block(2..nu + 1, 2..nu + 1);
    check_b(&block, nu, params)?;
    Ok(block)
}

/// The lens-space block of the ko eta matrix. Entry equality with the printed
/// form is required for `ℓ = 8`, span equality otherwise.
pub fn matrix_c(k: usize, params: GroupParams) -> Result<EtaMatrix> {
    let block = ko_eta_matrix(k, params)?.block(0..2, 0..2);
    check_c(&block, k, params)?;
    Ok(block)
}

/// One nonzero `E₂`-term `H̃^u(M; KSp^{-u}(pt))` of the Atiyah–Hirzebruch
/// spectral sequence for `KSp(M^{4ν-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AhssTerm {
    pub degree: usize,
    pub group: AbelianGroup,
}

/// `KSp^v(pt)`: `Z` for `v ≡ 0, 4`, `Z₂` for `v ≡ -5, -6` (mod 8), else 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Coefficients {
    Integers,
    Two,
    Zero,
}

fn ksp_of_point(v: i64) -> Coefficients {
    match v.rem_euclid(8) {
        0 | 4 => Coefficients::Integers,
        3 | 2 => Coefficients::Two,
        _ => Coefficients::Zero,
    }
}

pub fn ahss_terms(nu: usize, params: GroupParams) -> Vec<AhssTerm> {
    let top = 4 * nu - 1;
    let ell = BigInt::from(params.ell());
    let two = BigInt::from(2);
    let mut out = Vec::new();
    for u in 1..=top {
        let group = match (ksp_of_point(-(u as i64)), u % 8) {
            // H̃^u(M; Z) = Z_ℓ for u ≡ 0, 4 below the top degree
            (Coefficients::Integers, 0 | 4) if u < top => AbelianGroup::from_cyclic_orders(&[ell.clone()]),
            // H̃^u(M; Z₂) = Z₂ ⊕ Z₂ for u ≡ 1, 2, 5, 6
            (Coefficients::Two, 1 | 2 | 5 | 6) => {
                AbelianGroup::from_cyclic_orders(&[two.clone(), two.clone()])
            }
            _ => continue,
        };
        out.push(AhssTerm { degree: u, group });
    }
    out
}

/// Product of the orders of the `E₂` terms on the line `u + v = 0`.
pub fn ahss_order_bound(nu: usize, params: GroupParams) -> BigInt {
    ahss_terms(nu, params).iter().map(|t| t.group.order()).product()
}

/// `4^ν ℓ^{ν-1}` for ν even, `4^{ν-1} ℓ^{ν-1}` for ν odd.
pub fn ksp_order_formula(nu: usize, params: GroupParams) -> BigInt {
    let four_exp = if nu % 2 == 0 { nu } else { nu - 1 };
    BigInt::from(4).pow(four_exp as u32) * BigInt::from(params.ell()).pow(nu as u32 - 1)
}

/// `4^k ℓ^k` for k even, `4^{k+1} ℓ^k` for k odd.
pub fn ko_order_formula(k: usize, params: GroupParams) -> BigInt {
    let four_exp = if k % 2 == 0 { k } else { k + 1 };
    BigInt::from(4).pow(four_exp as u32) * BigInt::from(params.ell()).pow(k as u32)
}

/// `ko_{8n+ε}(Σ^{-1}BS³/BN)`: `Z₂` for ε = 1, 2, `Z_{2^{2n+2}}` for ε = 3, 7,
/// zero otherwise.
pub fn sigma_bs3_bn_ko(degree: usize) -> AbelianGroup {
    let n = (degree.saturating_sub(1)) / 8;
    let eps = degree - 8 * n;
    match eps {
        1 | 2 => AbelianGroup::from_cyclic_orders(&[BigInt::from(2)]),
        3 | 7 => AbelianGroup::from_cyclic_orders(&[BigInt::one() << (2 * n + 2)]),
        _ => AbelianGroup::trivial(),
    }
}

/// Names of the summands of the stable splitting
/// `BQ_ℓ ≃ BSL₂(F_q) ∨ Σ^{-1}BS³/BN ∨ Σ^{-1}BS³/BN` matched by the two blocks.
/// Labels only; nothing about the splitting is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingLabels {
    pub a_part: String,
    pub b_part: String,
    /// Degree `4k - 1` of the matching ko group.
    pub ko_degree: usize,
}

impl SplittingLabels {
    fn new(ko_degree: usize) -> Self {
        SplittingLabels {
            a_part: format!("ko_{ko_degree}(Σ^-1 BS^3/BN)^2"),
            b_part: format!("ko_{ko_degree}(BSL_2(F_q))"),
            ko_degree,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KGroupKind {
    /// `KSp(M^{4ν-1}(Q_ℓ, ν·γ₁))`
    Ksp,
    /// `ko_{4k-1}(BQ_ℓ)`
    Ko,
}

#[derive(Clone, Debug)]
pub struct KGroupReport {
    pub kind: KGroupKind,
    pub params: GroupParams,
    /// `ν` for KSp, `k` for ko.
    pub index: usize,
    /// Size of the B block plus one: `ν`, or `k + 1` for ko.
    pub nu: usize,
    pub matrix: EtaMatrix,
    pub group: AbelianGroup,
    /// Span of the `Θ` rows (the A or C block).
    pub a_block: AbelianGroup,
    pub b_block: AbelianGroup,
    pub order: BigInt,
    pub ahss_bound: BigInt,
    pub formula_order: BigInt,
    pub splitting: SplittingLabels,
}

fn cyclic_square(order_log2: usize) -> AbelianGroup {
    let d = BigInt::one() << order_log2;
    AbelianGroup::from_cyclic_orders(&[d.clone(), d])
}

fn assemble(
    kind: KGroupKind,
    params: GroupParams,
    index: usize,
    nu: usize,
    matrix: EtaMatrix,
    expected_a: AbelianGroup,
    ko_degree: usize,
) -> Result<KGroupReport> {
    let n = matrix.rows();
    let a = matrix.block(0..2, 0..2);
    let b = matrix.block(2..n, 2..n);
    if !matrix.block(0..2, 2..n).is_zero() || !matrix.block(2..n, 0..2).is_zero() {
        return Err(mismatch(format!(
            "off-diagonal eta blocks are nonzero for ell {} index {index}",
            params.ell()
        )));
    }
    let a_block = a.row_span()?;
    if a_block != expected_a {
        return Err(mismatch(format!(
            "Theta block spans {a_block}, expected {expected_a} (ell {}, index {index})",
            params.ell()
        )));
    }
    let b_block = b.row_span()?;
    let group = matrix.row_span()?;
    if group != a_block.direct_sum(&b_block) {
        return Err(mismatch(format!("row span {group} is not the sum of its blocks")));
    }
    let order = group.order();
    Ok(KGroupReport {
        kind,
        params,
        index,
        nu,
        matrix,
        group,
        a_block,
        b_block,
        order,
        ahss_bound: ahss_order_bound(nu, params),
        formula_order: match kind {
            KGroupKind::Ksp => ksp_order_formula(index, params),
            KGroupKind::Ko => ko_order_formula(index, params),
        },
        splitting: SplittingLabels::new(ko_degree),
    })
}

/// `KSp(M^{4ν-1}(Q_ℓ, ν·γ₁)) ≅ Z_{2^ν}² ⊕ 𝓑_ν` (ν even) or
/// `Z_{2^{ν-1}}² ⊕ 𝓑_ν` (ν odd).
pub fn ksp_group(nu: usize, params: GroupParams) -> Result<KGroupReport> {
    let matrix = ksp_eta_matrix(nu, params)?;
    check_a(&matrix.block(0..2, 0..2), nu, params)?;
    check_b(&matrix.block(2..nu + 1, 2..nu + 1), nu, params)?;
    let expected_a = cyclic_square(if nu % 2 == 0 { nu } else { nu - 1 });
    assemble(KGroupKind::Ksp, params, nu, nu, matrix, expected_a, 4 * (nu - 1) - 1)
}

/// `ko_{4k-1}(BQ_ℓ) ≅ Z_{2^k}² ⊕ 𝓑_{k+1}` (k even) or
/// `Z_{2^{k+1}}² ⊕ 𝓑_{k+1}` (k odd).
pub fn ko_group(k: usize, params: GroupParams) -> Result<KGroupReport> {
    let matrix = ko_eta_matrix(k, params)?;
    check_c(&matrix.block(0..2, 0..2), k, params)?;
    check_b(&matrix.block(2..k + 2, 2..k + 2), k + 1, params)?;
    let expected_a = cyclic_square(if k % 2 == 0 { k } else { k + 1 });
    assemble(KGroupKind::Ko, params, k, k + 1, matrix, expected_a, 4 * k - 1)
}

/// Whether `ko_{4k-1}(BQ_ℓ)` and `KSp(M^{4k+3}(Q_ℓ, τ))` have the same
/// invariant factors.
pub fn ko_matches_ksp(k: usize, params: GroupParams) -> Result<bool> {
    Ok(ko_group(k, params)?.group == ksp_group(k + 1, params)?.group)
}
