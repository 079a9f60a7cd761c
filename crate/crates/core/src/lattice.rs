//! Finitely generated abelian groups, rational subgroups of a free
//! lattice, and the integer constraint solver. Everything downstream
//! reduces to the operations in this module.
//!
//! Conventions: lattice elements are column vectors over [`Int`];
//! a sublattice basis is the set of columns of its matrix, kept in the
//! canonical column-style Hermite normal form of [`linalg::hnf_cols`].

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Smith};
use crate::matrix::Mat;
use crate::{Int, IntMat, Rat, RatMat};

/// A free abelian group `Z^rank` with a label for error messages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeLattice {
    pub rank: usize,
    pub label: String,
}

impl FreeLattice {
    pub fn new(rank: usize, label: impl Into<String>) -> Self {
        FreeLattice { rank, label: label.into() }
    }
}

/// A homomorphism of free lattices, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    pub source: FreeLattice,
    pub target: FreeLattice,
    pub matrix: IntMat,
}

impl LatticeMap {
    pub fn new(source: FreeLattice, target: FreeLattice, matrix: IntMat) -> Result<Self> {
        if matrix.rows() != target.rank {
            return Err(Error::DimensionMismatch {
                context: "lattice map rows",
                expected: target.rank,
                got: matrix.rows(),
            });
        }
        if matrix.cols() != source.rank {
            return Err(Error::DimensionMismatch {
                context: "lattice map cols",
                expected: source.rank,
                got: matrix.cols(),
            });
        }
        Ok(LatticeMap { source, target, matrix })
    }

    pub fn identity(lattice: FreeLattice) -> Self {
        let n = lattice.rank;
        LatticeMap { source: lattice.clone(), target: lattice, matrix: Mat::identity(n) }
    }

    /// `self ∘ other`, defined when `other.target` rank matches.
    pub fn compose(&self, other: &LatticeMap) -> Result<Self> {
        if other.target.rank != self.source.rank {
            return Err(Error::DimensionMismatch {
                context: "lattice map composition",
                expected: self.source.rank,
                got: other.target.rank,
            });
        }
        Ok(LatticeMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }
}

/// A finitely generated abelian group in invariant-factor form:
/// `Z^free_rank × Z/n_1 × … × Z/n_s` with `n_1 | n_2 | …`, each `n_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(n: i64) -> Self {
        assert!(n >= 2);
        FinAbGroup { free_rank: 0, torsion: vec![Int::from(n)] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of coordinates of an element (free first, then torsion).
    pub fn coord_len(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl std::fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for n in &self.torsion {
            parts.push(format!("Z/{n}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// A finitely generated subgroup of `ambient ⊗ Q`, stored canonically as
/// `(1/denom) * span(basis columns)` with `basis` in column HNF and the
/// content of `(denom, basis)` reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSubgroup {
    ambient_rank: usize,
    denom: Int,
    basis: IntMat,
}

impl RationalSubgroup {
    pub fn from_rational_generators(ambient_rank: usize, gens: &[Vec<Rat>]) -> Result<Self> {
        for g in gens {
            if g.len() != ambient_rank {
                return Err(Error::DimensionMismatch {
                    context: "rational subgroup generator",
                    expected: ambient_rank,
                    got: g.len(),
                });
            }
        }
        let mut denom = Int::one();
        for g in gens {
            for x in g {
                denom = denom.lcm(x.denom());
            }
        }
        let cols: Vec<Vec<Int>> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * Rat::from(denom.clone())).to_integer()).collect())
            .collect();
        Ok(Self::canonicalize(ambient_rank, denom, Mat::from_cols(cols)))
    }

    pub fn from_integral(basis: IntMat) -> Self {
        let n = basis.rows();
        Self::canonicalize(n, Int::one(), basis)
    }

    /// The full ambient lattice `Z^n`.
    pub fn full(ambient_rank: usize) -> Self {
        RationalSubgroup {
            ambient_rank,
            denom: Int::one(),
            basis: Mat::identity(ambient_rank),
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        RationalSubgroup {
            ambient_rank,
            denom: Int::one(),
            basis: Mat::zeros(ambient_rank, 0),
        }
    }

    fn canonicalize(ambient_rank: usize, denom: Int, gens: IntMat) -> Self {
        let mut basis = linalg::hnf_cols(&gens);
        let mut g = denom.clone();
        for i in 0..basis.rows() {
            for j in 0..basis.cols() {
                g = g.gcd(&basis[(i, j)]);
            }
        }
        let mut denom = denom;
        if g > Int::one() {
            denom /= g.clone();
            basis = basis.map(|x| x / g.clone());
            basis = linalg::hnf_cols(&basis);
        }
        RationalSubgroup { ambient_rank, denom, basis }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis as rational column vectors.
    pub fn rational_basis(&self) -> RatMat {
        let d = Rat::from(self.denom.clone());
        self.basis.map(|x| Rat::from(x.clone()) / d.clone())
    }

    /// Membership of a rational vector.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_rank, "membership dimension mismatch");
        let scaled: Vec<Rat> =
            v.iter().map(|x| x * Rat::from(self.denom.clone())).collect();
        if !scaled.iter().all(|x| x.is_integer()) {
            return false;
        }
        let b = self.basis.map(|x| Rat::from(x.clone()));
        let rhs = Mat::from_cols(vec![scaled]);
        match linalg::field_solve(&b, &rhs) {
            Some(x) => (0..x.rows()).all(|i| x[(i, 0)].is_integer()),
            None => false,
        }
    }

    /// The intersection with the integral ambient lattice, as an integer
    /// lattice in column HNF.
    pub fn intersect_integral(&self) -> IntMat {
        if self.denom.is_one() {
            return self.basis.clone();
        }
        // x = B c with x = 0 mod denom: kernel of [B | denom * I].
        let n = self.ambient_rank;
        let k = self.basis.cols();
        let scaled_id = IntMat::identity(n).map(|x| x.clone() * self.denom.clone());
        let m = self.basis.hstack(&scaled_id);
        let ker = linalg::kernel(&m);
        let coeffs = ker.submatrix(&(0..k).collect::<Vec<_>>(), &(0..ker.cols()).collect::<Vec<_>>());
        let gens = self.basis.mul(&coeffs).map(|x| x.clone() / self.denom.clone());
        linalg::hnf_cols(&gens)
    }
}

/// Smith decomposition of an integer matrix; see [`linalg::smith`].
pub fn smith_decompose(m: &IntMat) -> Smith<Int> {
    linalg::smith(m)
}

/// The cokernel `target / im(map)` in invariant-factor form.
pub fn cokernel(map: &LatticeMap) -> FinAbGroup {
    QuotientPresentation::new(&map.matrix).group
}

/// A presentation of `Z^n / im(relations)` with projection and a
/// deterministic canonical lift.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub group: FinAbGroup,
    ambient_rank: usize,
    /// Image lattice of the relation map, column HNF.
    relations: IntMat,
    u: IntMat,
    u_inv: IntMat,
    rank: usize,
    /// SNF diagonal indices carrying torsion coordinates.
    torsion_idx: Vec<usize>,
}

impl QuotientPresentation {
    pub fn new(relation_matrix: &IntMat) -> Self {
        let n = relation_matrix.rows();
        let sm = linalg::smith(relation_matrix);
        let rank = sm.rank();
        let mut torsion = Vec::new();
        let mut torsion_idx = Vec::new();
        for (i, f) in sm.invariant_factors().into_iter().enumerate() {
            if f > Int::one() {
                torsion_idx.push(i);
                torsion.push(f);
            }
        }
        QuotientPresentation {
            group: FinAbGroup { free_rank: n - rank, torsion },
            ambient_rank: n,
            relations: linalg::hnf_cols(relation_matrix),
            u: sm.u,
            u_inv: sm.u_inv,
            rank,
            torsion_idx,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn relations(&self) -> &IntMat {
        &self.relations
    }

    /// Coordinates of the class of `v`: free coordinates first, then
    /// torsion coordinates reduced into `[0, n_i)`.
    pub fn class_of(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.ambient_rank, "class_of dimension mismatch");
        let y = self.u.mul_vec(v);
        let mut coords: Vec<Int> = y[self.rank..].to_vec();
        for (&i, n) in self.torsion_idx.iter().zip(&self.group.torsion) {
            coords.push(y[i].mod_floor(n));
        }
        coords
    }

    /// Validates element coordinates and reduces torsion coordinates.
    pub fn normalize_coords(&self, coords: &[Int]) -> Result<Vec<Int>> {
        if coords.len() != self.group.coord_len() {
            return Err(Error::InvalidComponent(format!(
                "expected {} coordinates for pi1 = {}, got {}",
                self.group.coord_len(),
                self.group,
                coords.len()
            )));
        }
        let mut out = coords.to_vec();
        let f = self.group.free_rank;
        for (c, n) in out[f..].iter_mut().zip(&self.group.torsion) {
            *c = c.mod_floor(n);
        }
        Ok(out)
    }

    /// Deterministic canonical lift of an element: the Smith-form
    /// preimage, reduced modulo the relation lattice.
    pub fn lift(&self, coords: &[Int]) -> Result<Vec<Int>> {
        let coords = self.normalize_coords(coords)?;
        let mut y = vec![Int::zero(); self.ambient_rank];
        let f = self.group.free_rank;
        for (j, c) in coords[..f].iter().enumerate() {
            y[self.rank + j] = c.clone();
        }
        for (&i, c) in self.torsion_idx.iter().zip(&coords[f..]) {
            y[i] = c.clone();
        }
        Ok(self.reduce_mod_relations(&self.u_inv.mul_vec(&y)))
    }

    /// Canonical coset representative: reduces against the column-HNF
    /// relation basis by floor division on pivot rows.
    pub fn reduce_mod_relations(&self, v: &[Int]) -> Vec<Int> {
        let mut x = v.to_vec();
        for j in 0..self.relations.cols() {
            let p = (0..self.ambient_rank)
                .find(|&i| !self.relations[(i, j)].is_zero())
                .expect("zero column in relation basis");
            let q = x[p].div_floor(&self.relations[(p, j)]);
            if !q.is_zero() {
                for i in 0..self.ambient_rank {
                    x[i] -= q.clone() * self.relations[(i, j)].clone();
                }
            }
        }
        x
    }
}

/// Saturation: the largest subgroup of the ambient lattice with the same
/// `Q`-span as `s`. Idempotent.
pub fn saturate(s: &RationalSubgroup) -> RationalSubgroup {
    // The Q-span of s equals the Q-span of its (integer) basis matrix.
    let sm = linalg::smith(&s.basis);
    let gens = sm.u_inv.take_cols(sm.rank());
    RationalSubgroup::from_integral(gens)
}

/// Unique extension of a map given on the columns of `domain` to the
/// columns of `target`, when it exists with integer (coordinate) values.
///
/// `values` holds one column of output coordinates per `domain` column.
/// Returns `None` when the linear extension exists rationally but is not
/// integral, or when `target` does not lie in the span of `domain`.
pub fn extend_values(domain: &RatMat, values: &IntMat, target: &RatMat) -> Option<IntMat> {
    assert_eq!(values.cols(), domain.cols(), "extend_values shape mismatch");
    let x = linalg::field_solve(domain, target)?;
    let vals_q = values.map(|v| Rat::from(v.clone())).mul(&x);
    if (0..vals_q.rows()).all(|i| (0..vals_q.cols()).all(|j| vals_q[(i, j)].is_integer())) {
        Some(vals_q.map(|v| v.to_integer()))
    } else {
        None
    }
}

/// The spec operation `integral_extension`: `l` is total on the ambient
/// `Z^n` (one column of values per ambient basis vector); the result
/// gives the values of its unique linear extension on the canonical
/// basis of `target`, if that extension is integral.
pub fn integral_extension(l: &IntMat, target: &RationalSubgroup) -> Option<IntMat> {
    let inter = target.intersect_integral();
    let domain = inter.map(|v| Rat::from(v.clone()));
    let values = l.mul(&inter);
    extend_values(&domain, &values, &target.rational_basis())
}

/// One homogeneous condition on an unknown integer vector.
#[derive(Clone, Debug)]
pub enum Constraint {
    /// `coeffs · x = 0` exactly.
    Vanish(Vec<Rat>),
    /// `coeffs · x ∈ Z`.
    Integral(Vec<Rat>),
}

impl Constraint {
    fn coeffs(&self) -> &[Rat] {
        match self {
            Constraint::Vanish(c) | Constraint::Integral(c) => c,
        }
    }
}

/// Basis (column HNF) of the sublattice of `Z^n` cut out by the
/// constraints. An empty constraint list yields the identity basis.
pub fn solution_lattice(n: usize, constraints: &[Constraint]) -> Result<IntMat> {
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut moduli: Vec<Int> = Vec::new();
    for c in constraints {
        if c.coeffs().len() != n {
            return Err(Error::DimensionMismatch {
                context: "solution_lattice constraint",
                expected: n,
                got: c.coeffs().len(),
            });
        }
        let mut q = Int::one();
        for x in c.coeffs() {
            q = q.lcm(x.denom());
        }
        let row: Vec<Int> =
            c.coeffs().iter().map(|x| (x * Rat::from(q.clone())).to_integer()).collect();
        match c {
            Constraint::Vanish(_) => {
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    moduli.push(Int::zero());
                }
            }
            Constraint::Integral(_) => {
                // Integer rows are always integral on Z^n.
                if !q.is_one() {
                    rows.push(row);
                    moduli.push(q);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(Mat::identity(n));
    }
    let a = Mat::from_rows(rows);
    let mod_count = moduli.iter().filter(|m| !m.is_zero()).count();
    let mut aux = IntMat::zeros(a.rows(), mod_count);
    let mut col = 0;
    for (i, m) in moduli.iter().enumerate() {
        if !m.is_zero() {
            aux[(i, col)] = -m.clone();
            col += 1;
        }
    }
    let ker = linalg::kernel(&a.hstack(&aux));
    let sols = ker.submatrix(&(0..n).collect::<Vec<_>>(), &(0..ker.cols()).collect::<Vec<_>>());
    Ok(linalg::hnf_cols(&sols))
}

/// Whether two integer lattices given by basis columns are equal, decided
/// by mutual membership (exact).
pub fn lattice_eq(a: &IntMat, b: &IntMat) -> bool {
    assert_eq!(a.rows(), b.rows(), "lattice_eq ambient mismatch");
    contains_lattice(a, b) && contains_lattice(b, a)
}

/// Whether every column of `b` lies in the column span of `a` over `Z`.
pub fn contains_lattice(a: &IntMat, b: &IntMat) -> bool {
    if b.cols() == 0 {
        return true;
    }
    let aq = a.map(|v| Rat::from(v.clone()));
    let bq = b.map(|v| Rat::from(v.clone()));
    match linalg::field_solve(&aq, &bq) {
        Some(x) => (0..x.rows()).all(|i| (0..x.cols()).all(|j| x[(i, j)].is_integer())),
        None => false,
    }
}
