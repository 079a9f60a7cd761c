//! Root data of reductive groups and the derived lattice chain: coroot
//! lattice, center lattice, derived-subgroup lattice, the lattice of the
//! central quotient, the coweight lattice, and the fundamental group,
//! together with Weyl reflections, basic inner products, component lifts,
//! and the rank-one central extension used to realize a component.

use num_traits::{One, Signed, Zero};

use crate::cartan::{self, CartanComponent};
use crate::error::{Error, Result};
use crate::lattice::{solution_lattice, Constraint, QuotientPresentation, RationalSubgroup};
use crate::linalg;
use crate::matrix::Mat;
use crate::{int, Int, IntMat, Rat, RatMat};

/// An integer presentation of a root datum: the cocharacter lattice
/// `Z^rank`, simple roots as functionals (rows), and simple coroots as
/// vectors (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: IntMat,
    coroots: IntMat,
    pairing: IntMat,
    components: Vec<CartanComponent>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.roots.rows()
    }

    /// Simple roots as rows of an `l x rank` matrix.
    pub fn roots(&self) -> &IntMat {
        &self.roots
    }

    /// Simple coroots as columns of a `rank x l` matrix.
    pub fn coroots(&self) -> &IntMat {
        &self.coroots
    }

    /// `pairing[i][j] = <alpha_i, alpha_j_vee>`.
    pub fn pairing(&self) -> &IntMat {
        &self.pairing
    }

    pub fn components(&self) -> &[CartanComponent] {
        &self.components
    }

    pub fn cartan_type(&self) -> String {
        if self.components.is_empty() {
            return "torus".to_string();
        }
        self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" x ")
    }

    /// Block sum of two root data (direct product of groups).
    pub fn block_sum(&self, other: &RootDatum) -> RootDatum {
        let n = self.rank + other.rank;
        let pad = |row: &[Int], left: usize| -> Vec<Int> {
            let mut v = vec![Int::zero(); n];
            for (k, x) in row.iter().enumerate() {
                v[left + k] = x.clone();
            }
            v
        };
        let mut roots = Vec::new();
        for r in self.roots.row_list() {
            roots.push(pad(&r, 0));
        }
        for r in other.roots.row_list() {
            roots.push(pad(&r, self.rank));
        }
        let mut coroots = Vec::new();
        for c in self.coroots.col_list() {
            coroots.push(pad(&c, 0));
        }
        for c in other.coroots.col_list() {
            coroots.push(pad(&c, self.rank));
        }
        build_root_datum(n, roots, coroots).expect("block sum of valid data is valid")
    }
}

/// Validates and classifies a root datum given by explicit matrices.
pub fn build_root_datum(
    rank: usize,
    simple_roots: Vec<Vec<Int>>,
    simple_coroots: Vec<Vec<Int>>,
) -> Result<RootDatum> {
    if simple_roots.len() != simple_coroots.len() {
        return Err(Error::DimensionMismatch {
            context: "simple root/coroot count",
            expected: simple_roots.len(),
            got: simple_coroots.len(),
        });
    }
    for r in simple_roots.iter().chain(&simple_coroots) {
        if r.len() != rank {
            return Err(Error::DimensionMismatch {
                context: "root datum vector length",
                expected: rank,
                got: r.len(),
            });
        }
    }
    let l = simple_roots.len();
    let roots = if l == 0 { Mat::zeros(0, rank) } else { Mat::from_rows(simple_roots) };
    let coroots = if l == 0 { Mat::zeros(rank, 0) } else { Mat::from_cols(simple_coroots) };
    if linalg::rank(&coroots) != l {
        return Err(Error::DependentCoroots);
    }
    let pairing = roots.mul(&coroots);
    let components = cartan::classify(&pairing)?;
    Ok(RootDatum { rank, roots, coroots, pairing, components })
}

/// An almost simple factor of the derived subgroup with its basic inner
/// product in the factor's simple-coroot basis.
#[derive(Clone, Debug)]
pub struct Factor {
    pub component: CartanComponent,
    pub basic_form: IntMat,
}

impl Factor {
    /// The basic form embedded as an `l x l` matrix on all simple
    /// coroots, supported on this factor's vertices.
    pub fn basic_form_global(&self, l: usize) -> IntMat {
        let mut m = IntMat::zeros(l, l);
        for (a, &va) in self.component.vertices.iter().enumerate() {
            for (b, &vb) in self.component.vertices.iter().enumerate() {
                m[(va, vb)] = self.basic_form[(a, b)].clone();
            }
        }
        m
    }
}

/// A root datum together with the full derived lattice chain and `pi1`.
#[derive(Clone, Debug)]
pub struct ReductiveDescriptor {
    pub datum: RootDatum,
    /// The span of the coroots, an integral sublattice.
    pub coroot_lattice: RationalSubgroup,
    /// Cocharacters annihilated by all roots; saturated.
    pub center_lattice: RationalSubgroup,
    /// Saturation of the coroot lattice.
    pub derived_lattice: RationalSubgroup,
    /// Image of the full lattice under the projection onto the coroot
    /// span along the center; the lattice of the central quotient.
    pub gbar_lattice: RationalSubgroup,
    /// Coweight lattice: the largest subgroup of the coroot span on
    /// which all roots are integral.
    pub gad_lattice: RationalSubgroup,
    pub pi1: QuotientPresentation,
    factors: Vec<Factor>,
    /// Column `i`: center coordinates of the i-th standard basis vector
    /// in the splitting `Q^n = span(coroots) ⊕ span(center)`.
    z_coords: RatMat,
    /// Column `i`: coroot-basis coordinates of the projection of the
    /// i-th standard basis vector onto the coroot span.
    w_coords: RatMat,
}

impl ReductiveDescriptor {
    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Rank of the center lattice.
    pub fn z_rank(&self) -> usize {
        self.center_lattice.rank()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_torus(&self) -> bool {
        self.datum.semisimple_rank() == 0
    }

    pub fn is_semisimple(&self) -> bool {
        self.z_rank() == 0
    }

    pub fn is_simply_connected(&self) -> bool {
        self.pi1.group.is_trivial()
    }

    /// Basis of the center lattice as columns.
    pub fn center_basis(&self) -> IntMat {
        self.center_lattice.intersect_integral()
    }

    /// Center coordinates of a rational vector.
    pub fn z_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.z_coords.mul_vec(v)
    }

    /// Coroot-basis coordinates of the projection onto the coroot span.
    pub fn w_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.w_coords.mul_vec(v)
    }

    /// Projection onto the coroot span along the center, in ambient
    /// coordinates; realizes the quotient-by-center lattice inside
    /// the rationalized cocharacter lattice.
    pub fn project_to_coroot_span(&self, v: &[Rat]) -> Vec<Rat> {
        let w = self.w_of(v);
        self.datum.coroots().map(|x| Rat::from(x.clone())).mul_vec(&w)
    }

    /// The canonical lift of a component, projected to the quotient
    /// lattice; this is the lift used to build membership constraints.
    pub fn gbar_lift(&self, coords: &[Int]) -> Result<Vec<Rat>> {
        let delta = self.pi1.lift(coords)?;
        let dq: Vec<Rat> = delta.iter().map(|x| Rat::from(x.clone())).collect();
        Ok(self.project_to_coroot_span(&dq))
    }
}

/// Computes the full descriptor from a validated root datum.
pub fn derive(datum: RootDatum) -> Result<ReductiveDescriptor> {
    let n = datum.rank();
    let l = datum.semisimple_rank();
    let coroot_lattice = RationalSubgroup::from_integral(datum.coroots().clone());
    let center = linalg::kernel(datum.roots());
    let center_lattice = RationalSubgroup::from_integral(center.clone());
    let derived_lattice = crate::lattice::saturate(&coroot_lattice);

    let rz = center.cols();
    assert_eq!(l + rz, n, "root kernel rank plus semisimple rank must fill the lattice");
    let m = datum.coroots().hstack(&center).map(|x| Rat::from(x.clone()));
    let m_inv = linalg::field_solve(&m, &RatMat::identity(n))
        .expect("coroots and center span the ambient space");
    let w_coords = m_inv.submatrix(&(0..l).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let z_coords = m_inv.submatrix(&(l..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());

    let coroots_q = datum.coroots().map(|x| Rat::from(x.clone()));
    let gbar_gens: Vec<Vec<Rat>> = (0..n).map(|i| coroots_q.mul_vec(&w_coords.col(i))).collect();
    let gbar_lattice = RationalSubgroup::from_rational_generators(n, &gbar_gens)?;

    // Coweights: coroots * pairing^{-1}.
    let gad_lattice = if l == 0 {
        RationalSubgroup::zero(n)
    } else {
        let p_inv = linalg::field_solve(
            &datum.pairing().map(|x| Rat::from(x.clone())),
            &RatMat::identity(l),
        )
        .expect("Cartan matrices are nonsingular");
        let coweights = coroots_q.mul(&p_inv);
        RationalSubgroup::from_rational_generators(n, &coweights.col_list())?
    };

    let pi1 = QuotientPresentation::new(datum.coroots());

    let mut factors = Vec::new();
    for component in datum.components() {
        let basic_form = solve_basic_form(datum.pairing(), &component.vertices)?;
        factors.push(Factor { component: component.clone(), basic_form });
    }

    Ok(ReductiveDescriptor {
        datum,
        coroot_lattice,
        center_lattice,
        derived_lattice,
        gbar_lattice,
        gad_lattice,
        pi1,
        factors,
        z_coords,
        w_coords,
    })
}

/// The Weyl-invariant positive-definite form on a factor's coroot span,
/// normalized to take the value 2 on short coroots; returned in the
/// factor's simple-coroot basis.
fn solve_basic_form(pairing: &IntMat, vertices: &[usize]) -> Result<IntMat> {
    let lf = vertices.len();
    let nvars = lf * (lf + 1) / 2;
    let var = |u: usize, v: usize| -> usize {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        a * lf - a * (a + 1) / 2 + b
    };
    // Local reflection matrices s_i(c_j) = c_j - pairing[i][j] c_i.
    let refl = |i: usize| -> IntMat {
        IntMat::from_fn(lf, lf, |r, c| {
            let mut x = if r == c { Int::one() } else { Int::zero() };
            if r == i {
                x -= pairing[(vertices[i], vertices[c])].clone();
            }
            x
        })
    };
    let mut constraints = Vec::new();
    for i in 0..lf {
        let s = refl(i);
        for a in 0..lf {
            for b in a..lf {
                let mut row = vec![Rat::zero(); nvars];
                for u in 0..lf {
                    for v in 0..lf {
                        let c = s[(u, a)].clone() * s[(v, b)].clone();
                        row[var(u, v)] += Rat::from(c);
                    }
                }
                row[var(a, b)] -= Rat::one();
                constraints.push(Constraint::Vanish(row));
            }
        }
    }
    let sols = solution_lattice(nvars, &constraints)?;
    assert_eq!(
        sols.cols(),
        1,
        "invariant symmetric forms on an irreducible factor form a rank-1 lattice"
    );
    let mut x0 = IntMat::from_fn(lf, lf, |u, v| sols[(var(u, v), 0)].clone());
    if x0[(0, 0)].is_negative() {
        x0 = x0.neg();
    }
    let min_diag = (0..lf).map(|i| x0[(i, i)].clone()).min().unwrap();
    assert!(min_diag > Int::zero(), "invariant form must be definite on the factor");
    let b = x0.map(|e| {
        let scaled = e.clone() * int(2);
        assert!(
            (scaled.clone() % min_diag.clone()).is_zero(),
            "basic form normalization must stay integral"
        );
        scaled / min_diag.clone()
    });
    for k in 1..=lf {
        let idx: Vec<usize> = (0..k).collect();
        assert!(
            linalg::det(&b.submatrix(&idx, &idx)) > Int::zero(),
            "basic form must be positive definite"
        );
    }
    Ok(b)
}

/// The basic inner product of an almost simple factor.
pub fn basic_inner_product(
    descriptor: &ReductiveDescriptor,
    factor_index: usize,
) -> Result<IntMat> {
    descriptor
        .factors
        .get(factor_index)
        .map(|f| f.basic_form.clone())
        .ok_or(Error::NotAlmostSimple { index: factor_index })
}

/// Simple reflections as involutions of the full cocharacter lattice:
/// `s_i(x) = x - alpha_i(x) * alpha_i_vee`.
pub fn simple_reflections(descriptor: &ReductiveDescriptor) -> Vec<IntMat> {
    let n = descriptor.rank();
    let datum = &descriptor.datum;
    (0..datum.semisimple_rank())
        .map(|i| {
            IntMat::from_fn(n, n, |r, c| {
                let mut x = if r == c { Int::one() } else { Int::zero() };
                x -= datum.coroots()[(r, i)].clone() * datum.roots()[(i, c)].clone();
                x
            })
        })
        .collect()
}

/// Deterministic lift of a `pi1` element to the cocharacter lattice.
pub fn lift_component(descriptor: &ReductiveDescriptor, coords: &[Int]) -> Result<Vec<Int>> {
    descriptor.pi1.lift(coords)
}

/// A lift of the image of the component in the quotient-by-center
/// lattice that makes the torus-restriction map on the Néron–Severi
/// lattice injective.
///
/// For genus >= 1 the canonical lift already works. For genus 0 the form
/// part of the torus restriction vanishes, so every almost simple factor
/// on which the lift is zero gets shifted by the smallest coweight of
/// that factor (in Hermite order) scaled minimally into the coroot
/// lattice, which keeps the component class unchanged.
pub fn find_injective_lift(
    descriptor: &ReductiveDescriptor,
    coords: &[Int],
    genus: usize,
) -> Result<Vec<Rat>> {
    let mut delta_bar = descriptor.gbar_lift(coords)?;
    if genus >= 1 {
        return Ok(delta_bar);
    }
    let n = descriptor.rank();
    for factor in descriptor.factors.clone() {
        let w = descriptor.w_of(&delta_bar);
        if factor.component.vertices.iter().any(|&v| !w[v].is_zero()) {
            continue;
        }
        let verts = &factor.component.vertices;
        let lf = verts.len();
        let local_pairing = IntMat::from_fn(lf, lf, |a, b| {
            descriptor.datum.pairing()[(verts[a], verts[b])].clone()
        });
        let p_inv = linalg::field_solve(
            &local_pairing.map(|x| Rat::from(x.clone())),
            &RatMat::identity(lf),
        )
        .expect("Cartan matrices are nonsingular");
        let local_coroots =
            IntMat::from_fn(n, lf, |r, c| descriptor.datum.coroots()[(r, verts[c])].clone());
        let coweights = local_coroots.map(|x| Rat::from(x.clone())).mul(&p_inv);
        let sub = RationalSubgroup::from_rational_generators(n, &coweights.col_list())?;
        let first = sub.rational_basis().col(0);
        // Smallest positive multiple landing in the coroot lattice.
        let coeffs = descriptor.w_of(&first);
        let mut mult = Int::one();
        for c in &coeffs {
            mult = num_integer::Integer::lcm(&mult, c.denom());
        }
        for (i, x) in first.iter().enumerate() {
            delta_bar[i] += x * Rat::from(mult.clone());
        }
    }
    Ok(delta_bar)
}

/// The rank-one central extension realizing a component: its cocharacter
/// lattice inside `Lambda ⊕ Z` is generated by the coroots (extended by
/// zero) and `(delta, 1)` for the canonical lift `delta`.
#[derive(Clone, Debug)]
pub struct GhatExtension {
    pub ghat: ReductiveDescriptor,
    /// Cocharacter matrix of the projection to the original group, in
    /// the basis `(coroots, (delta,1))` of the extension lattice.
    pub pihat: IntMat,
    /// Cocharacter matrix of the degree character, same basis.
    pub dt: IntMat,
    pub delta: Vec<Int>,
}

pub fn ghat_extension(descriptor: &ReductiveDescriptor, coords: &[Int]) -> Result<GhatExtension> {
    let datum = &descriptor.datum;
    let n = datum.rank();
    let l = datum.semisimple_rank();
    let delta = descriptor.pi1.lift(coords)?;

    // In the basis (coroots, (delta,1)) of the extension lattice, the
    // i-th root takes the values pairing[i][j] on the coroot generators
    // and alpha_i(delta) on the extra generator.
    let mut roots = Vec::with_capacity(l);
    for i in 0..l {
        let mut row = datum.pairing().row(i);
        row.push(crate::matrix::dot(&datum.roots().row(i), &delta));
        roots.push(row);
    }
    let mut coroots = Vec::with_capacity(l);
    for i in 0..l {
        let mut col = vec![Int::zero(); l + 1];
        col[i] = Int::one();
        coroots.push(col);
    }
    let ghat_datum = build_root_datum(l + 1, roots, coroots)?;
    let ghat = derive(ghat_datum)?;

    let mut pihat = IntMat::zeros(n, l + 1);
    for j in 0..l {
        for i in 0..n {
            pihat[(i, j)] = datum.coroots()[(i, j)].clone();
        }
    }
    for (i, d) in delta.iter().enumerate() {
        pihat[(i, l)] = d.clone();
    }
    let mut dt = IntMat::zeros(1, l + 1);
    dt[(0, l)] = Int::one();

    // The extension's pi1 is infinite cyclic and its degree-one
    // generator maps to the given component.
    assert_eq!(ghat.pi1.group, crate::lattice::FinAbGroup::free(1));
    let mut gen = vec![Int::zero(); l + 1];
    gen[l] = Int::one();
    let image_class = descriptor.pi1.class_of(&pihat.mul_vec(&gen));
    let expected = descriptor.pi1.normalize_coords(coords)?;
    if image_class != expected {
        return Err(Error::ComponentMismatch(format!(
            "extension generator maps to {image_class:?}, expected {expected:?}"
        )));
    }

    Ok(GhatExtension { ghat, pihat, dt, delta })
}

/// Exactness of the mapping-cone sequence
/// `0 -> center ⊕ coroots -> center ⊕ Lambda -> pi1 -> 0`.
pub fn mapping_cone_exact(descriptor: &ReductiveDescriptor) -> bool {
    let n = descriptor.rank();
    let l = descriptor.datum.semisimple_rank();
    let z = descriptor.center_basis();
    let rz = z.cols();
    let c = descriptor.datum.coroots();

    // First map: (u, v) -> (u, Z u + C v).
    let top = IntMat::identity(rz).hstack(&IntMat::zeros(rz, l));
    let bottom = z.hstack(c);
    let f = top.vstack(&bottom);
    if linalg::rank(&f) != rz + l {
        return false;
    }

    // Kernel of the second map (z, lambda) -> [lambda] - [Z z]:
    // pairs with lambda - Z z in the coroot lattice.
    let m = z.neg().hstack(&IntMat::identity(n)).hstack(&c.neg());
    let ker = linalg::kernel(&m);
    let mid =
        ker.submatrix(&(0..rz + n).collect::<Vec<_>>(), &(0..ker.cols()).collect::<Vec<_>>());
    if !crate::lattice::lattice_eq(&linalg::hnf_cols(&f), &linalg::hnf_cols(&mid)) {
        return false;
    }

    // Surjectivity: the images of the generators span the whole quotient.
    let span = IntMat::identity(n).hstack(&z).hstack(c);
    crate::lattice::lattice_eq(&linalg::hnf_cols(&span), &IntMat::identity(n))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::lattice::FinAbGroup;

    fn iv(v: Vec<i64>) -> Vec<Int> {
        v.into_iter().map(int).collect()
    }

    pub(crate) fn sl2() -> ReductiveDescriptor {
        derive(build_root_datum(1, vec![iv(vec![2])], vec![iv(vec![1])]).unwrap()).unwrap()
    }

    pub(crate) fn pgl2() -> ReductiveDescriptor {
        derive(build_root_datum(1, vec![iv(vec![1])], vec![iv(vec![2])]).unwrap()).unwrap()
    }

    pub(crate) fn gl2() -> ReductiveDescriptor {
        derive(build_root_datum(2, vec![iv(vec![1, -1])], vec![iv(vec![1, -1])]).unwrap())
            .unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(sl2().datum.cartan_type(), "A1");
        assert_eq!(pgl2().datum.cartan_type(), "A1");
        let gl2 = gl2();
        assert_eq!(gl2.datum.cartan_type(), "A1");
        assert_eq!(gl2.z_rank(), 1);
    }

    #[test]
    fn derive_sl2() {
        let d = sl2();
        assert!(d.pi1.group.is_trivial());
        assert_eq!(d.z_rank(), 0);
        // Coweight lattice is generated by coroot/2.
        assert!(d.gad_lattice.contains(&[crate::rat(1, 2)]));
        assert!(!d.gad_lattice.contains(&[crate::rat(1, 4)]));
    }

    #[test]
    fn derive_gl2() {
        let d = gl2();
        assert_eq!(d.pi1.group, FinAbGroup::free(1));
        let z = d.center_basis();
        assert_eq!(z.col(0), iv(vec![1, 1]));
        let derived = d.derived_lattice.intersect_integral();
        assert_eq!(derived.cols(), 1);
        let col = derived.col(0);
        assert_eq!(col[0].clone() + col[1].clone(), int(0));
        assert_eq!(col[0].abs(), int(1));
    }

    #[test]
    fn derive_torus() {
        let d = derive(build_root_datum(2, vec![], vec![]).unwrap()).unwrap();
        assert_eq!(d.pi1.group, FinAbGroup::free(2));
        assert_eq!(d.z_rank(), 2);
        assert_eq!(d.coroot_lattice.rank(), 0);
        assert_eq!(d.gad_lattice.rank(), 0);
    }

    #[test]
    fn chain_inclusions() {
        for d in [sl2(), pgl2(), gl2()] {
            let cr = d.coroot_lattice.rational_basis();
            for j in 0..cr.cols() {
                assert!(d.derived_lattice.contains(&cr.col(j)));
            }
            let der = d.derived_lattice.rational_basis();
            for j in 0..der.cols() {
                assert!(d.gbar_lattice.contains(&der.col(j)));
            }
            let gbar = d.gbar_lattice.rational_basis();
            for j in 0..gbar.cols() {
                assert!(d.gad_lattice.contains(&gbar.col(j)));
            }
        }
    }

    #[test]
    fn basic_form_a1_and_g2() {
        let d = sl2();
        assert_eq!(
            basic_inner_product(&d, 0).unwrap(),
            Mat::from_rows(vec![iv(vec![2])])
        );
        // G2: short coroot norm 2, long coroot norm 6, off-diagonal -3.
        let g2 = derive(
            build_root_datum(
                2,
                vec![iv(vec![2, -3]), iv(vec![-1, 2])],
                vec![iv(vec![1, 0]), iv(vec![0, 1])],
            )
            .unwrap(),
        )
        .unwrap();
        let b = basic_inner_product(&g2, 0).unwrap();
        let mut diag: Vec<Int> = vec![b[(0, 0)].clone(), b[(1, 1)].clone()];
        diag.sort();
        assert_eq!(diag, iv(vec![2, 6]));
        assert_eq!(b[(0, 1)], int(-3));
        assert_eq!(b[(1, 0)], int(-3));
    }

    #[test]
    fn reflections_are_involutions_fixing_center() {
        for d in [sl2(), pgl2(), gl2()] {
            let n = d.rank();
            for s in simple_reflections(&d) {
                assert_eq!(s.mul(&s), IntMat::identity(n));
                let z = d.center_basis();
                assert_eq!(s.mul(&z), z);
            }
        }
        // SL2 reflection is -1 on the coroot line.
        let s = &simple_reflections(&sl2())[0];
        assert_eq!(s[(0, 0)], int(-1));
        // GL2 reflection swaps the coordinates.
        let s = &simple_reflections(&gl2())[0];
        assert_eq!(s.mul_vec(&iv(vec![1, 0])), iv(vec![0, 1]));
        // torus: no reflections
        let t = derive(build_root_datum(1, vec![], vec![]).unwrap()).unwrap();
        assert!(simple_reflections(&t).is_empty());
    }

    #[test]
    fn lift_component_examples() {
        let p = pgl2();
        assert_eq!(lift_component(&p, &[int(0)]).unwrap(), iv(vec![0]));
        let delta = lift_component(&p, &[int(1)]).unwrap();
        assert_eq!(p.pi1.class_of(&delta), vec![int(1)]);
        assert_eq!(delta, iv(vec![1]));
        let g = gl2();
        let delta = lift_component(&g, &[int(1)]).unwrap();
        assert_eq!(g.pi1.class_of(&delta), vec![int(1)]);
    }

    #[test]
    fn injective_lift_examples() {
        // genus >= 1: canonical lift is returned unchanged.
        let d = sl2();
        let lift = find_injective_lift(&d, &[], 1).unwrap();
        assert!(lift.iter().all(|x| x.is_zero()));
        // genus 0, trivial component: a nonzero shift is chosen; for SL2
        // the smallest coweight is coroot/2, scaled by 2 into the coroot
        // lattice, giving the coroot itself.
        let lift = find_injective_lift(&d, &[], 0).unwrap();
        assert_eq!(lift, vec![Rat::from(int(1))]);
        // PGL2 component 1 at genus 0: the canonical lift is already
        // nonzero on the unique factor.
        let p = pgl2();
        let lift = find_injective_lift(&p, &[int(1)], 0).unwrap();
        assert_eq!(lift, vec![crate::rat(1, 1)]);
    }

    #[test]
    fn ghat_pgl2() {
        let p = pgl2();
        let ext = ghat_extension(&p, &[int(1)]).unwrap();
        assert_eq!(ext.ghat.pi1.group, FinAbGroup::free(1));
        // The extension lattice is generated by (2,0) and (1,1) in
        // Lambda ⊕ Z; in its internal basis the projection sends the
        // coroot generator to the coroot and the extra generator to the
        // lift of the component.
        assert_eq!(ext.pihat.col(0), iv(vec![2]));
        assert_eq!(ext.pihat.col(1), iv(vec![1]));
        assert_eq!(ext.dt.row(0), iv(vec![0, 1]));
        // Cokernel of coroots ⊕ 0 inside the extension lattice is free
        // of rank one.
        let coroot_cols = Mat::from_cols(vec![iv(vec![1, 0])]);
        let q = QuotientPresentation::new(&coroot_cols);
        assert_eq!(q.group, FinAbGroup::free(1));
    }

    #[test]
    fn ghat_sl2_splits() {
        let ext = ghat_extension(&sl2(), &[]).unwrap();
        // d = 0 splits: the lattice is coroots ⊕ Z.
        assert_eq!(ext.pihat.col(1), iv(vec![0]));
        assert_eq!(ext.ghat.datum.cartan_type(), "A1");
        assert_eq!(ext.ghat.z_rank(), 1);
    }

    #[test]
    fn mapping_cone_examples() {
        assert!(mapping_cone_exact(&gl2()));
        assert!(mapping_cone_exact(&sl2()));
        assert!(mapping_cone_exact(&pgl2()));
        let t = derive(build_root_datum(2, vec![], vec![]).unwrap()).unwrap();
        assert!(mapping_cone_exact(&t));
    }

    #[test]
    fn extend_b_identity_a1() {
        // b(lambda, coroot) = alpha(lambda) * b(coroot, coroot) / 2 for
        // the basic form of a simply connected factor.
        let d = sl2();
        let b = basic_inner_product(&d, 0).unwrap();
        let p = d.datum.pairing();
        let lf = b.rows();
        for j in 0..lf {
            for lam in 0..lf {
                let lhs = b[(lam, j)].clone() * int(2);
                let rhs = p[(j, lam)].clone() * b[(j, j)].clone();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
