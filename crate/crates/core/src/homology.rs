//! Simplicial complexes on `[n]` and their reduced homology over prime fields.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::poset::CharacteristicPoset;
use crate::varset::VarSet;

/// A prime modulus, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        let is_prime = (2..(1 << 31)).contains(&p)
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if is_prime {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    fn inverse(self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let p = self.0;
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

/// A simplicial complex on vertices from `[ambient]`, given by its facets.
///
/// The void complex (no faces at all) has no facets; the complex `{∅}` has
/// the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets of `raw` as facets.
    pub fn from_facets<I>(ambient: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = VarSet>,
    {
        let full = VarSet::full(ambient);
        let mut sets: Vec<VarSet> = Vec::new();
        for f in raw {
            if let Some(var) = f.difference(full).min() {
                return Err(Error::VarOutOfRange { var, ambient });
            }
            sets.push(f);
        }
        Ok(SimplicialComplex {
            ambient,
            facets: maximal(sets),
        })
    }

    /// The Stanley–Reisner complex of `I`: its faces are exactly `P_{S/I}`.
    pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let poset = CharacteristicPoset::quotient(ideal)?;
        Ok(SimplicialComplex {
            ambient: ideal.ambient(),
            facets: poset.maximal_members(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn vertices(&self) -> VarSet {
        self.facets
            .iter()
            .fold(VarSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// `max |F| - 1`; `-1` for `{∅}` and the void complex.
    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    /// The induced subcomplex on `sigma`: faces of `self` contained in `sigma`.
    pub fn induced(&self, sigma: VarSet) -> SimplicialComplex {
        SimplicialComplex {
            ambient: self.ambient,
            facets: maximal(self.facets.iter().map(|f| f.intersection(sigma)).collect()),
        }
    }

    /// All faces grouped by cardinality (index `k` holds the `(k-1)`-faces),
    /// canonically ordered inside each group.
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let verts = self.vertices();
        let w = verts.len();
        let mut by_size: Vec<Vec<VarSet>> = vec![Vec::new(); w + 1];
        if self.facets.is_empty() {
            return by_size;
        }
        // Mark the compressed facets, then close downward sweeping masks in
        // decreasing order so every face is seen after all of its cofaces.
        let mut marked = vec![false; 1 << w];
        for f in &self.facets {
            marked[f.compress(verts).bits() as usize] = true;
        }
        for mask in (0..marked.len()).rev() {
            if marked[mask] {
                let mut rest = mask;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    marked[mask ^ low] = true;
                    rest ^= low;
                }
                let face = VarSet::from_bits(mask as u64).expand(verts);
                by_size[face.len()].push(face);
            }
        }
        for group in &mut by_size {
            group.sort();
        }
        by_size
    }

    /// Ranks of `H̃_q(Δ; F_p)` for `q = -1, 0, ..., dim Δ`, so entry `q + 1`
    /// is the rank in dimension `q`.
    pub fn reduced_homology_ranks(&self, p: Prime) -> Vec<usize> {
        let faces = self.faces_by_size();
        let top = faces
            .iter()
            .rposition(|g| !g.is_empty())
            .map_or(0, |t| t + 1);
        let len = (self.dimension() + 2).max(1) as usize;
        // boundary_rank[k]: rank of ∂ from size-k faces to size-(k-1) faces
        let mut boundary_rank = vec![0usize; top + 2];
        for k in 1..top {
            boundary_rank[k] = boundary_matrix_rank(&faces[k], &faces[k - 1], p);
        }
        (0..len)
            .map(|k| {
                let f = faces.get(k).map_or(0, Vec::len);
                f - boundary_rank[k] - boundary_rank.get(k + 1).copied().unwrap_or(0)
            })
            .collect()
    }
}

fn maximal(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort();
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    // larger sets first; a set can only be contained in one that comes later
    for s in sets.into_iter().rev() {
        if !kept.iter().any(|&k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Rank over `F_p` of the simplicial boundary map from `cols` (faces of size
/// `k`) to `rows` (faces of size `k - 1`), by sparse column reduction.
fn boundary_matrix_rank(cols: &[VarSet], rows: &[VarSet], p: Prime) -> usize {
    let modulus = p.get();
    let row_index: HashMap<VarSet, u32> = rows
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i as u32))
        .collect();
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for face in cols {
        let mut col: Vec<(u32, u64)> = face
            .iter()
            .enumerate()
            .map(|(t, v)| {
                let sign = if t % 2 == 0 { 1 } else { modulus - 1 };
                (row_index[&face.without(v)], sign)
            })
            .collect();
        col.sort_unstable_by_key(|e| e.0);
        while let Some(&(low, val)) = col.last() {
            match pivots.get(&low) {
                Some(pivot) => {
                    let pv = pivot.last().expect("pivot column is nonempty").1;
                    let factor = val * p.inverse(pv) % modulus;
                    col = axpy(&col, pivot, modulus - factor, modulus);
                }
                None => {
                    pivots.insert(low, col);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + c·b` over `F_p`, for row-sorted sparse columns.
fn axpy(a: &[(u32, u64)], b: &[(u32, u64)], c: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, val) = match (a.get(i), b.get(j)) {
            (Some(&(ra, va)), Some(&(rb, _))) if ra < rb => {
                i += 1;
                (ra, va)
            }
            (Some(&(ra, _)), Some(&(rb, vb))) if rb < ra => {
                j += 1;
                (rb, c * vb % p)
            }
            (Some(&(ra, va)), Some(&(_, vb))) => {
                i += 1;
                j += 1;
                (ra, (va + c * vb) % p)
            }
            (Some(&(ra, va)), None) => {
                i += 1;
                (ra, va)
            }
            (None, Some(&(rb, vb))) => {
                j += 1;
                (rb, c * vb % p)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("ambient", &self.ambient)
            .field("facets", &self.facets)
            .finish()
    }
}
