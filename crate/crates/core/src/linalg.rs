//! Exact rank of sparse matrices over `Q` or `F_p`.
//!
//! Rows are inserted one at a time into an echelon form keyed by leading
//! column. Over `Q` the elimination is fraction-free: rows are scaled to
//! primitive integer vectors and combined by cross-multiplication.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Scalar};

/// A sparse row: `(column, entry)` pairs, any order, zeros allowed.
pub type SparseRow = Vec<(usize, Scalar)>;

enum Echelon {
    Integer(HashMap<usize, Vec<(usize, BigInt)>>),
    Modular {
        p: u64,
        pivots: HashMap<usize, Vec<(usize, u64)>>,
    },
}

/// Incremental row echelon form.
pub struct RowEchelon {
    inner: Echelon,
    rank: usize,
}

impl RowEchelon {
    pub fn new(field: Field) -> Self {
        let inner = match field {
            Field::Rational => Echelon::Integer(HashMap::new()),
            Field::Prime(p) => Echelon::Modular {
                p: p as u64,
                pivots: HashMap::new(),
            },
        };
        RowEchelon { inner, rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a row; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, Scalar)]) -> bool {
        let independent = match &mut self.inner {
            Echelon::Integer(pivots) => insert_integer(pivots, row),
            Echelon::Modular { p, pivots } => insert_modular(*p, pivots, row),
        };
        if independent {
            self.rank += 1;
        }
        independent
    }
}

/// Rank of the matrix whose rows are given.
pub fn rank<'a>(field: Field, rows: impl IntoIterator<Item = &'a SparseRow>) -> usize {
    let mut ech = RowEchelon::new(field);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

fn primitive(row: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let flip = row.first().map(|(_, v)| v.is_negative()).unwrap_or(false);
    if g.is_zero() {
        return;
    }
    if flip {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

fn insert_integer(pivots: &mut HashMap<usize, Vec<(usize, BigInt)>>, row: &[(usize, Scalar)]) -> bool {
    let mut denom_lcm = BigInt::one();
    for (_, s) in row {
        if let Scalar::Q(q) = s {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
    }
    let mut dense: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
    for (c, s) in row {
        let Scalar::Q(q) = s else {
            panic!("modular entry in rational matrix")
        };
        if q.is_zero() {
            continue;
        }
        dense.push((*c, q.numer() * (&denom_lcm / q.denom())));
    }
    let mut cur = combine_sorted(dense);
    primitive(&mut cur);
    while let Some((lead, lead_val)) = cur.first().cloned() {
        let Some(piv) = pivots.get(&lead) else {
            pivots.insert(lead, cur);
            return true;
        };
        let piv_val = &piv[0].1;
        // cur := piv_val * cur - lead_val * piv
        let g = piv_val.gcd(&lead_val);
        let a = piv_val / &g;
        let b = &lead_val / &g;
        let mut out = Vec::with_capacity(cur.len() + piv.len());
        let (mut i, mut j) = (0, 0);
        while i < cur.len() || j < piv.len() {
            let ci = cur.get(i).map(|x| x.0).unwrap_or(usize::MAX);
            let pj = piv.get(j).map(|x| x.0).unwrap_or(usize::MAX);
            let (col, v) = if ci < pj {
                i += 1;
                (ci, &a * &cur[i - 1].1)
            } else if pj < ci {
                j += 1;
                (pj, -(&b * &piv[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (ci, &a * &cur[i - 1].1 - &b * &piv[j - 1].1)
            };
            if !v.is_zero() {
                out.push((col, v));
            }
        }
        primitive(&mut out);
        cur = out;
    }
    false
}

fn combine_sorted<T: std::ops::AddAssign + Zero>(mut v: Vec<(usize, T)>) -> Vec<(usize, T)> {
    v.sort_by_key(|x| x.0);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn insert_modular(p: u64, pivots: &mut HashMap<usize, Vec<(usize, u64)>>, row: &[(usize, Scalar)]) -> bool {
    let mut v: Vec<(usize, u64)> = Vec::with_capacity(row.len());
    for (c, s) in row {
        let Scalar::Fp { value, .. } = s else {
            panic!("rational entry in modular matrix")
        };
        v.push((*c, *value as u64));
    }
    v.sort_by_key(|x| x.0);
    let mut cur: Vec<(usize, u64)> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match cur.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = (*lx + x) % p,
            _ => cur.push((c, x % p)),
        }
    }
    cur.retain(|x| x.1 != 0);
    while let Some(&(lead, lead_val)) = cur.first() {
        let Some(piv) = pivots.get(&lead) else {
            let inv = inv_mod(lead_val, p);
            for x in cur.iter_mut() {
                x.1 = x.1 * inv % p;
            }
            pivots.insert(lead, cur);
            return true;
        };
        // pivot rows are monic
        let mut out = Vec::with_capacity(cur.len() + piv.len());
        let (mut i, mut j) = (0, 0);
        while i < cur.len() || j < piv.len() {
            let ci = cur.get(i).map(|x| x.0).unwrap_or(usize::MAX);
            let pj = piv.get(j).map(|x| x.0).unwrap_or(usize::MAX);
            let (col, val) = if ci < pj {
                i += 1;
                (ci, cur[i - 1].1)
            } else if pj < ci {
                j += 1;
                (pj, (p - lead_val * piv[j - 1].1 % p) % p)
            } else {
                i += 1;
                j += 1;
                (ci, (cur[i - 1].1 + p - lead_val * piv[j - 1].1 % p) % p)
            };
            if val != 0 {
                out.push((col, val));
            }
        }
        cur = out;
    }
    false
}
