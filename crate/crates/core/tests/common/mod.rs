#![allow(dead_code)]

use num::{BigInt, BigRational, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trifree::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős-Rényi graph with a random edge density.
pub fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen();
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Random bipartite graph on a random two-colouring.
pub fn random_bipartite(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let p: f64 = rng.gen_range(0.2..1.0);
    Graph::from_fn(n, |u, v| side[u] != side[v] && rng.gen_bool(p))
}

/// Every labelled graph on `n` vertices, in mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |mask| {
        let mut bit = 0;
        Graph::from_fn(n, |_, _| {
            let on = mask >> bit & 1 == 1;
            bit += 1;
            on
        })
    })
}

pub fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Polynomial with rational coefficients, lowest degree first.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn is_constant(p: &Poly) -> bool {
    p.len() <= 1
}

fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let lead = b.last().unwrap().clone();
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bc;
        }
        q[shift] = c;
        r.pop();
        if r.is_empty() {
            r.push(BigRational::zero());
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    let lead = p.last().unwrap().clone();
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Yun's square-free factorisation: `(factor, multiplicity)` pairs.
fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let f = monic(trim(f.clone()));
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = divmod(&f, &a0).0;
    let mut d = sub(&divmod(&df, &a0).0, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while !is_constant(&b) {
        let a = gcd(&b, &d);
        let next_b = divmod(&b, &a).0;
        let c = divmod(&d, &a).0;
        d = sub(&c, &derivative(&next_b));
        if !is_constant(&a) {
            out.push((a, i));
        }
        b = next_b;
        i += 1;
    }
    out
}

fn eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Real roots of a square-free polynomial with only real roots, found by
/// bisecting between consecutive roots of its derivative.
fn real_roots(p: &[f64]) -> Vec<f64> {
    let deg = p.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = p[deg];
    let bound = 1.0 + p[..deg].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let dp: Vec<f64> = p.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    let mut cuts = vec![-bound];
    cuts.extend(real_roots(&dp));
    cuts.push(bound);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(p, lo), eval(p, hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if eval(p, mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

/// `det(xI - A)` by permutation expansion, integer coefficients.
pub fn characteristic_polynomial(g: &Graph) -> Vec<i64> {
    let n = g.n();
    let mut coeffs = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, 1, &mut |perm, sign| {
        // Product of entries (x delta_ij - a_ij); each factor is x, -1 or 0.
        let mut fixed = 0;
        for (i, &j) in perm.iter().enumerate() {
            if i == j {
                fixed += 1;
            } else if !g.has_edge(i, j) {
                return;
            }
        }
        let moved = (n - fixed) as u32;
        coeffs[fixed] += sign * (-1i64).pow(moved);
    });
    coeffs
}

fn permute(p: &mut Vec<usize>, k: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
    if k == p.len() {
        f(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, if i == k { sign } else { -sign }, f);
        p.swap(k, i);
    }
}

/// Eigenvalues from the exact characteristic polynomial, descending.
pub fn oracle_eigenvalues(g: &Graph) -> Vec<f64> {
    let cp: Poly = characteristic_polynomial(g)
        .into_iter()
        .map(|c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let mut values = Vec::new();
    for (factor, mult) in square_free(&cp) {
        let coeffs: Vec<f64> = factor.iter().map(|c| c.to_f64().unwrap()).collect();
        for r in real_roots(&coeffs) {
            values.extend(std::iter::repeat_n(r, mult));
        }
    }
    sorted_desc(values)
}
