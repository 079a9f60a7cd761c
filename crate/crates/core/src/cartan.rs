//! Cartan matrix validation and Dynkin-type classification.
//!
//! The pairing convention is `p[i][j] = <alpha_i, alpha_j_vee>`, the value
//! of the i-th simple root on the j-th simple coroot. Presentations that
//! permute simple roots are accepted; classification works on the graph.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{int, Int, IntMat};

/// Irreducible Dynkin families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// One irreducible component of the Dynkin diagram, with the indices of
/// its simple roots in the ambient presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanComponent {
    pub family: Family,
    pub rank: usize,
    pub vertices: Vec<usize>,
}

impl std::fmt::Display for CartanComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn not_cartan(row: usize, col: usize, value: &Int) -> Error {
    Error::NotCartan { row, col, value: value.to_string() }
}

/// Validates the Cartan axioms and classifies the diagram into
/// irreducible components.
pub fn classify(p: &IntMat) -> Result<Vec<CartanComponent>> {
    let n = p.rows();
    assert_eq!(n, p.cols(), "pairing matrix must be square");
    for i in 0..n {
        if p[(i, i)] != int(2) {
            return Err(not_cartan(i, i, &p[(i, i)]));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if p[(i, j)] > Int::zero() {
                return Err(not_cartan(i, j, &p[(i, j)]));
            }
            if p[(i, j)].is_zero() != p[(j, i)].is_zero() {
                return Err(not_cartan(i, j, &p[(i, j)]));
            }
            let prod = p[(i, j)].clone() * p[(j, i)].clone();
            if prod > int(3) {
                return Err(not_cartan(i, j, &p[(i, j)]));
            }
        }
    }

    // Connected components of the diagram.
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut verts = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            verts.push(v);
            for w in 0..n {
                if w != v && !seen[w] && !p[(v, w)].is_zero() {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        comps.push(classify_component(p, verts)?);
    }
    Ok(comps)
}

fn classify_component(p: &IntMat, vertices: Vec<usize>) -> Result<CartanComponent> {
    let n = vertices.len();
    let local = |i: usize, j: usize| p[(vertices[i], vertices[j])].clone();
    let fail = || not_cartan(vertices[0], vertices[0], &p[(vertices[0], vertices[0])]);

    if n == 1 {
        return Ok(CartanComponent { family: Family::A, rank: 1, vertices });
    }

    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if !local(i, j).is_zero() {
                let mult = local(i, j) * local(j, i);
                edges.push((i, j, mult));
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    // The diagram of a finite root system is a tree.
    if edges.len() != n - 1 {
        return Err(fail());
    }

    let triples = edges.iter().filter(|e| e.2 == int(3)).count();
    let doubles = edges.iter().filter(|e| e.2 == int(2)).count();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();

    if triples > 0 {
        if n == 2 && triples == 1 && doubles == 0 {
            return Ok(CartanComponent { family: Family::G, rank: 2, vertices });
        }
        return Err(fail());
    }

    if doubles > 0 {
        if doubles != 1 || !branch.is_empty() {
            return Err(fail());
        }
        let (u, v) = edges
            .iter()
            .find_map(|e| (e.2 == int(2)).then_some((e.0, e.1)))
            .unwrap();
        // p[long][short_coroot] = -2 identifies the long end.
        let (long_end, short_end) = if local(u, v) == int(-2) { (u, v) } else { (v, u) };
        if n == 2 {
            return Ok(CartanComponent { family: Family::B, rank: 2, vertices });
        }
        let leaves: Vec<usize> = (0..n).filter(|&w| degree[w] == 1).collect();
        if leaves.contains(&short_end) && degree[long_end] == 2 {
            return Ok(CartanComponent { family: Family::B, rank: n, vertices });
        }
        if leaves.contains(&long_end) && degree[short_end] == 2 {
            return Ok(CartanComponent { family: Family::C, rank: n, vertices });
        }
        if n == 4 && degree[u] == 2 && degree[v] == 2 {
            return Ok(CartanComponent { family: Family::F, rank: 4, vertices });
        }
        return Err(fail());
    }

    // Simply laced.
    match branch.len() {
        0 => Ok(CartanComponent { family: Family::A, rank: n, vertices }),
        1 => {
            let b = branch[0];
            if degree[b] != 3 {
                return Err(fail());
            }
            // Arm lengths walking away from the branch vertex.
            let mut arms = Vec::new();
            for &(i, j, _) in edges.iter().filter(|e| e.0 == b || e.1 == b) {
                let first = if i == b { j } else { i };
                let mut len = 1;
                let mut prev = b;
                let mut cur = first;
                while let Some(w) =
                    (0..n).find(|&w| w != prev && w != cur && !local(cur, w).is_zero())
                {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(CartanComponent { family: Family::D, rank: k + 3, vertices }),
                [1, 2, 2] => Ok(CartanComponent { family: Family::E, rank: 6, vertices }),
                [1, 2, 3] => Ok(CartanComponent { family: Family::E, rank: 7, vertices }),
                [1, 2, 4] => Ok(CartanComponent { family: Family::E, rank: 8, vertices }),
                _ => Err(fail()),
            }
        }
        _ => Err(fail()),
    }
}

/// Standard Cartan matrix of an irreducible family, in the convention
/// `p[i][j] = <alpha_i, alpha_j_vee>`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<IntMat> {
    let bad = || Error::InvalidRank { family: family.to_string(), rank };
    let n = rank;
    fn chain(m: &mut IntMat, i: usize, j: usize) {
        m[(i, j)] = int(-1);
        m[(j, i)] = int(-1);
    }
    let mut m = IntMat::identity(n).map(|x| x.clone() * int(2));
    match family {
        Family::A => {
            if n < 1 {
                return Err(bad());
            }
            for i in 1..n {
                chain(&mut m, i - 1, i);
            }
        }
        Family::B | Family::C => {
            if n < 2 {
                return Err(bad());
            }
            for i in 1..n - 1 {
                chain(&mut m, i - 1, i);
            }
            if family == Family::B {
                m[(n - 2, n - 1)] = int(-2);
                m[(n - 1, n - 2)] = int(-1);
            } else {
                m[(n - 2, n - 1)] = int(-1);
                m[(n - 1, n - 2)] = int(-2);
            }
        }
        Family::D => {
            if n < 3 {
                return Err(bad());
            }
            for i in 1..n - 1 {
                chain(&mut m, i - 1, i);
            }
            chain(&mut m, n - 3, n - 1);
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return Err(bad());
            }
            chain(&mut m, 0, 2);
            chain(&mut m, 1, 3);
            chain(&mut m, 2, 3);
            for i in 4..n {
                chain(&mut m, i - 1, i);
            }
        }
        Family::F => {
            if n != 4 {
                return Err(bad());
            }
            chain(&mut m, 0, 1);
            chain(&mut m, 2, 3);
            m[(1, 2)] = int(-2);
            m[(2, 1)] = int(-1);
        }
        Family::G => {
            if n != 2 {
                return Err(bad());
            }
            m[(0, 1)] = int(-1);
            m[(1, 0)] = int(-3);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Mat;

    fn ident(fam: Family, rank: usize) {
        let m = cartan_matrix(fam, rank).unwrap();
        let comps = classify(&m).unwrap();
        assert_eq!(comps.len(), 1, "{fam}{rank} should be irreducible");
        assert_eq!(comps[0].family, fam);
        assert_eq!(comps[0].rank, rank);
    }

    #[test]
    fn classify_standard_families() {
        ident(Family::A, 1);
        ident(Family::A, 4);
        ident(Family::B, 3);
        ident(Family::C, 3);
        ident(Family::B, 4);
        ident(Family::C, 4);
        ident(Family::D, 4);
        ident(Family::D, 5);
        ident(Family::E, 6);
        ident(Family::E, 7);
        ident(Family::E, 8);
        ident(Family::F, 4);
        ident(Family::G, 2);
    }

    #[test]
    fn rank_two_double_edge_is_b() {
        // B2 and C2 present the same abstract diagram.
        let c2 = cartan_matrix(Family::C, 2).unwrap();
        let comps = classify(&c2).unwrap();
        assert_eq!(comps[0].family, Family::B);
        assert_eq!(comps[0].rank, 2);
    }

    #[test]
    fn classify_disconnected() {
        // Block sum A1 + A2.
        let m = Mat::from_rows(vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]])
            .map(|v| int(*v));
        let comps = classify(&m).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!((comps[0].family, comps[0].rank), (Family::A, 1));
        assert_eq!((comps[1].family, comps[1].rank), (Family::A, 2));
    }

    #[test]
    fn classify_permuted_presentation() {
        // A3 with shuffled vertex order is still A3.
        let a3 = cartan_matrix(Family::A, 3).unwrap();
        let perm = [2usize, 0, 1];
        let shuffled = IntMat::from_fn(3, 3, |i, j| a3[(perm[i], perm[j])].clone());
        let comps = classify(&shuffled).unwrap();
        assert_eq!((comps[0].family, comps[0].rank), (Family::A, 3));
    }

    #[test]
    fn reject_invalid() {
        let bad_diag = Mat::from_rows(vec![vec![1]]).map(|v| int(*v));
        assert!(classify(&bad_diag).is_err());
        let pos_off = Mat::from_rows(vec![vec![2, 1], vec![1, 2]]).map(|v| int(*v));
        assert!(classify(&pos_off).is_err());
        let asym_zero = Mat::from_rows(vec![vec![2, 0], vec![-1, 2]]).map(|v| int(*v));
        assert!(classify(&asym_zero).is_err());
        let too_big = Mat::from_rows(vec![vec![2, -2], vec![-2, 2]]).map(|v| int(*v));
        assert!(classify(&too_big).is_err());
        // A cycle (affine type) is not a finite Cartan matrix.
        let cycle =
            Mat::from_rows(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
                .map(|v| int(*v));
        assert!(classify(&cycle).is_err());
    }
}
