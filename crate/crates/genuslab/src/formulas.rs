//! Exact counting formulas for rooted maps, their independent brute-force
//! oracles, polygon dissections, labelled cubic graph counts, and the
//! outward-rounded interval arithmetic used wherever a logarithm appears.

use crate::embedding::EmbeddingScheme;
use crate::graph::Graph;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn factorial(k: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= i;
    }
    f
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Which parameter the composition sum of the unicellular formula runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionIndexing {
    /// Compositions of the Euler genus h into n non-negative parts.
    Euler,
    /// Compositions of h/2 into n non-negative parts (0 when h is odd).
    Genus,
}

/// Sum over compositions of `total` into `parts` non-negative parts of the
/// product of 1/(2*i_j + 1), by dynamic programming in exact rationals.
fn composition_sum(parts: usize, total: usize) -> BigRational {
    let mut row = vec![BigRational::zero(); total + 1];
    row[0] = BigRational::one();
    for _ in 0..parts {
        let mut next = vec![BigRational::zero(); total + 1];
        for b in 0..=total {
            if row[b].is_zero() {
                continue;
            }
            for i in 0..=(total - b) {
                let w = BigRational::new(BigInt::one(), BigInt::from(2 * i as i64 + 1));
                next[b + i] += &row[b] * w;
            }
        }
        row = next;
    }
    row[total].clone()
}

/// Closed-form count of rooted unicellular maps on an orientable surface of
/// Euler genus h with n vertices (hence n + h - 1 edges):
/// (2n+2h-2)! / (2^h n! (n+h-1)!) times a composition sum whose indexing is
/// selectable; exactly one choice agrees with the permutation oracle, and at
/// h = 0 both collapse to the Catalan number C(n-1).
pub fn unicellular_orientable_rooted(
    n: usize,
    h: usize,
    indexing: CompositionIndexing,
) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let total = match indexing {
        CompositionIndexing::Euler => h,
        CompositionIndexing::Genus => {
            if h % 2 != 0 {
                return Ok(BigRational::zero());
            }
            h / 2
        }
    };
    let num = factorial((2 * n + 2 * h - 2) as u64);
    let den = BigInt::from(2u32).pow(h as u32)
        * factorial(n as u64)
        * factorial((n + h - 1) as u64);
    let prefactor = BigRational::new(num, den);
    Ok(prefactor * composition_sum(n, total))
}

/// Independent oracle for rooted unicellular orientable maps: permutations
/// sigma on the 2e darts with n cycles such that sigma composed with the
/// fixed edge involution (1 2)(3 4)... is a single (2e)-cycle; the rooted
/// count is that tally divided by 2^(e-1) (e-1)!.
pub fn unicellular_orientable_oracle(n: usize, h: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let e = n + h - 1;
    if e == 0 {
        return Ok(BigRational::one());
    }
    if e > 5 {
        return Err(Error::CeilingExceeded { what: "permutation oracle", requested: e, limit: 5 });
    }
    let d = 2 * e;
    let mut perm: Vec<usize> = (0..d).collect();
    let mut count: u64 = 0;
    // Heap's algorithm over all d! permutations.
    let mut c = vec![0usize; d];
    let mut check = |perm: &[usize]| {
        if cycle_count(perm) != n {
            return;
        }
        // rho(i) = sigma(alpha0(i)); alpha0 swaps 2j <-> 2j+1 (0-based).
        let rho: Vec<usize> = (0..d).map(|i| perm[i ^ 1]).collect();
        if cycle_count(&rho) == 1 {
            count += 1;
        }
    };
    check(&perm);
    let mut i = 1;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            check(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let den = BigInt::from(2u32).pow((e - 1) as u32) * factorial((e - 1) as u64);
    Ok(BigRational::new(BigInt::from(count), den))
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

/// Closed-form count of rooted precubic (all degrees 1 or 3) unicellular
/// maps with m = 2k+1 edges on the nonorientable surface of Euler genus
/// h = 2j >= 2: c_j (2k)! / (6^j k! (k+1-3j)!) with
/// c_j = 3 * 2^(3j-2) (j!/(2j)!) * sum_{l<j} C(2l,l)/16^l; zero when
/// k+1-3j < 0 (such maps need at least 3h-1 edges).
pub fn precubic_nonorientable_rooted(m: usize, h: usize) -> Result<BigRational> {
    if m % 2 == 0 {
        return Err(Error::OutOfValidityRange {
            name: "precubic unicellular count".into(),
            detail: format!("edge count m = {m} must be odd"),
        });
    }
    if h % 2 != 0 || h == 0 {
        return Err(Error::OutOfValidityRange {
            name: "precubic unicellular count".into(),
            detail: format!("Euler genus h = {h} must be even and positive here"),
        });
    }
    let k = (m - 1) / 2;
    let j = h / 2;
    if k + 1 < 3 * j {
        return Ok(BigRational::zero());
    }
    let mut series = BigRational::zero();
    for l in 0..j {
        series += BigRational::new(
            binomial(2 * l as i64, l as i64),
            BigInt::from(16u32).pow(l as u32),
        );
    }
    let cj = big(3)
        * BigRational::new(
            BigInt::from(2u32).pow(3 * j as u32),
            BigInt::from(4),
        )
        * BigRational::new(factorial(j as u64), factorial(2 * j as u64))
        * series;
    let main = BigRational::new(
        factorial(2 * k as u64),
        BigInt::from(6u32).pow(j as u32)
            * factorial(k as u64)
            * factorial((k + 1 - 3 * j) as u64),
    );
    Ok(cj * main)
}

/// Raw weighted tally behind the signed-scheme oracle: over all labelled
/// multigraphs with m edges, every degree 1 or 3, and v = m+1-h vertices
/// (sorted edge lists over the pair-and-loop slots), all rotation systems
/// and all 2^m signatures, count the connected unicellular nonorientable
/// ones with weight 2^(-loops) (the two darts of a loop are
/// interchangeable, so each loop map is met twice).
pub fn precubic_scheme_weight(m: usize, h: usize) -> Result<BigRational> {
    if h >= m + 1 {
        return Err(Error::Precondition("unicellular needs v = m+1-h >= 1".into()));
    }
    let v = m + 1 - h;
    if v > 6 {
        return Err(Error::CeilingExceeded { what: "scheme oracle", requested: v, limit: 6 });
    }
    // Slots: loops (u,u) then pairs (u,w), u < w, lexicographic.
    let mut slots = Vec::new();
    for u in 1..=v {
        slots.push((u, u));
    }
    for u in 1..=v {
        for w in (u + 1)..=v {
            slots.push((u, w));
        }
    }
    let mut total = BigRational::zero();
    let mut degrees = vec![0usize; v];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    enumerate_multigraphs(&slots, 0, m, &mut degrees, &mut edges, &mut |edges| {
        if degrees_ok(edges, v) {
            total += scheme_weight_of_multigraph(v, edges);
        }
    });
    Ok(total)
}

fn degrees_ok(edges: &[(usize, usize)], v: usize) -> bool {
    let mut deg = vec![0usize; v];
    for &(a, b) in edges {
        deg[a - 1] += 1;
        deg[b - 1] += 1;
    }
    deg.iter().all(|&d| d == 1 || d == 3)
}

fn enumerate_multigraphs(
    slots: &[(usize, usize)],
    i: usize,
    left: usize,
    degrees: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    f: &mut dyn FnMut(&[(usize, usize)]),
) {
    if left == 0 {
        f(edges);
        return;
    }
    if i == slots.len() {
        return;
    }
    let (a, b) = slots[i];
    let cap = if a == b { left.min(1) } else { left.min(3) };
    for mult in 0..=cap {
        let add = if a == b { 2 * mult } else { mult };
        if degrees[a - 1] + add > 3 || (a != b && degrees[b - 1] + mult > 3) {
            break;
        }
        degrees[a - 1] += if a == b { 2 * mult } else { mult };
        if a != b {
            degrees[b - 1] += mult;
        }
        for _ in 0..mult {
            edges.push((a, b));
        }
        enumerate_multigraphs(slots, i + 1, left - mult, degrees, edges, f);
        for _ in 0..mult {
            edges.pop();
        }
        degrees[a - 1] -= if a == b { 2 * mult } else { mult };
        if a != b {
            degrees[b - 1] -= mult;
        }
    }
}

fn scheme_weight_of_multigraph(v: usize, edges: &[(usize, usize)]) -> BigRational {
    let g = match Graph::new(v, edges.to_vec(), false) {
        Ok(g) => g,
        Err(_) => return BigRational::zero(),
    };
    if !g.is_connected() {
        return BigRational::zero();
    }
    let m = g.e();
    let loops = edges.iter().filter(|&&(a, b)| a == b).count();
    // Identical parallel copies are interchangeable in the sorted edge
    // list, so each map with a slot of multiplicity t is met t! times.
    let mut mult_factor = BigInt::one();
    let mut run = 1u64;
    for w in edges.windows(2) {
        if w[0] == w[1] {
            run += 1;
            mult_factor *= run;
        } else {
            run = 1;
        }
    }
    let darts_at: Vec<Vec<usize>> = (1..=v).map(|u| g.darts_at(u)).collect();
    let radices: Vec<u64> = darts_at
        .iter()
        .map(|d| (1..d.len().max(1) as u64).product::<u64>().max(1))
        .collect();
    let total_rot: u64 = radices.iter().product();
    let mut hits: u64 = 0;
    for ridx in 0..total_rot {
        let mut idx = ridx;
        let mut rotations = Vec::with_capacity(v);
        for (u, darts) in darts_at.iter().enumerate() {
            let local = idx % radices[u];
            idx /= radices[u];
            if darts.is_empty() {
                rotations.push(Vec::new());
                continue;
            }
            let mut rot = vec![darts[0]];
            rot.extend(unrank(local, &darts[1..]));
            rotations.push(rot);
        }
        for mask in 0u64..(1 << m) {
            let signature: Vec<i8> = (0..m)
                .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
                .collect();
            let s = EmbeddingScheme::new(g.clone(), rotations.clone(), signature)
                .expect("valid scheme");
            if s.faces() == 1 && !s.is_orientable() {
                hits += 1;
            }
        }
    }
    BigRational::new(
        BigInt::from(hits),
        BigInt::from(2u32).pow(loops as u32) * mult_factor,
    )
}

fn unrank(mut idx: u64, items: &[usize]) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    for i in (1..=pool.len()).rev() {
        let f: u64 = (1..i as u64).product::<u64>().max(1);
        let j = (idx / f) as usize;
        idx %= f;
        out.push(pool.remove(j));
    }
    out
}

/// Signed-scheme oracle for leaf-rooted precubic unicellular nonorientable
/// maps: the raw weighted scheme tally, times the number of leaves to root
/// at, divided by the v! vertex relabellings and 2^v local reflections.
/// The normalization was calibrated once at (m, h) = (5, 2) = 6 and (3, 2)
/// = 0 and independently confirmed at (7, 2) = 60.
pub fn precubic_nonorientable_oracle(m: usize, h: usize) -> Result<BigRational> {
    let v = m + 1 - h;
    let w = precubic_scheme_weight(m, h)?;
    // A graph with every degree 1 or 3 has 3v - 2m leaves.
    let leaves = (3 * v).saturating_sub(2 * m);
    let den = factorial(v as u64) * BigInt::from(2u32).pow(v as u32);
    Ok(w * big(leaves as i64) / BigRational::from_integer(den))
}

// ---------------------------------------------------------------------------
// Polygon dissections
// ---------------------------------------------------------------------------

/// Number of ways to draw exactly j pairwise noncrossing diagonals in a
/// convex polygon with k labelled vertices, via the interval recurrence on
/// the face containing the root side (k,1). D(2,0) = 1 by convention.
pub fn dissection_count(k: usize, j: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::Precondition("polygon needs at least 2 vertices".into()));
    }
    // d[t][j]: dissections of a t-gon rooted at one side.
    let mut d = vec![vec![BigInt::zero(); j + 2]; k + 1];
    d[2][0] = BigInt::one();
    for t in 3..=k {
        // chains[v][c]: chains of sides/diagonals from vertex 1 to vertex v
        // of the t-gon, using c diagonals in total (each diagonal step from
        // u to w closes a sub-polygon on w-u+1 vertices rooted at it).
        let mut chains = vec![vec![BigInt::zero(); j + 2]; t + 1];
        chains[1][0] = BigInt::one();
        for vtx in 2..=t {
            for u in 1..vtx {
                if vtx == t && u == 1 {
                    continue; // a single step 1 -> t would be the root side
                }
                let size = vtx - u + 1;
                for c in 0..=j {
                    if chains[u][c].is_zero() {
                        continue;
                    }
                    if size == 2 {
                        let add = chains[u][c].clone();
                        chains[vtx][c] += add;
                    } else {
                        for inner in 0..=j.saturating_sub(c + 1) {
                            if d[size][inner].is_zero() {
                                continue;
                            }
                            let add = chains[u][c].clone() * &d[size][inner];
                            chains[vtx][c + 1 + inner] += add;
                        }
                    }
                }
            }
        }
        for c in 0..=j + 1 {
            d[t][c] = chains[t][c].clone();
        }
    }
    Ok(d[k][j].clone())
}

/// Brute-force dissection oracle: every subset of the k(k-3)/2 diagonals,
/// counted when pairwise noncrossing. Only for k <= 8.
pub fn dissection_count_oracle(k: usize, j: usize) -> Result<BigInt> {
    if k > 8 {
        return Err(Error::CeilingExceeded { what: "dissection oracle", requested: k, limit: 8 });
    }
    if k < 2 {
        return Err(Error::Precondition("polygon needs at least 2 vertices".into()));
    }
    let mut diags = Vec::new();
    for a in 1..=k {
        for b in (a + 2)..=k {
            if a == 1 && b == k {
                continue; // adjacent around the polygon
            }
            diags.push((a, b));
        }
    }
    let crossing = |x: (usize, usize), y: (usize, usize)| {
        let (a, b) = x;
        let (c, d) = y;
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };
    let mut count = BigInt::zero();
    for mask in 0u64..(1 << diags.len()) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let chosen: Vec<(usize, usize)> = diags
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, &x)| chosen[i + 1..].iter().all(|&y| !crossing(x, y)));
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Closed-form cross-check for dissections: C(k-3, j) C(k+j-1, j) / (j+1).
pub fn dissection_closed_form(k: usize, j: usize) -> BigInt {
    binomial(k as i64 - 3, j as i64) * binomial(k as i64 + j as i64 - 1, j as i64)
        / BigInt::from(j as u64 + 1)
}

// ---------------------------------------------------------------------------
// Labelled cubic graphs
// ---------------------------------------------------------------------------

/// Number of labelled simple 3-regular graphs on k vertices (0 for odd 3k/2
/// or k < 4), by degree-constrained recursive enumeration; k <= 8.
pub fn cubic_labelled_count(k: usize) -> Result<BigInt> {
    if k > 8 {
        return Err(Error::CeilingExceeded { what: "cubic enumeration", requested: k, limit: 8 });
    }
    if k < 4 || (3 * k) % 2 != 0 {
        return Ok(BigInt::zero());
    }
    let slots: Vec<(usize, usize)> = {
        let mut s = Vec::new();
        for u in 1..=k {
            for w in (u + 1)..=k {
                s.push((u, w));
            }
        }
        s
    };
    let target = 3 * k / 2;
    let mut deg = vec![0usize; k];
    fn rec(
        slots: &[(usize, usize)],
        i: usize,
        left: usize,
        deg: &mut [usize],
        count: &mut u64,
    ) {
        if left == 0 {
            if deg.iter().all(|&d| d == 3) {
                *count += 1;
            }
            return;
        }
        if i == slots.len() || slots.len() - i < left {
            return;
        }
        // Once slot i's first endpoint is past, its degree is frozen.
        let (a, b) = slots[i];
        if a >= 2 && deg[a - 2] != 3 {
            return;
        }
        if deg[a - 1] < 3 && deg[b - 1] < 3 {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
            rec(slots, i + 1, left - 1, deg, count);
            deg[a - 1] -= 1;
            deg[b - 1] -= 1;
        }
        rec(slots, i + 1, left, deg, count);
    }
    let mut count = 0u64;
    rec(&slots, 0, target, &mut deg, &mut count);
    Ok(BigInt::from(count))
}

/// Floating-point asymptotic comparator for the labelled cubic count:
/// sqrt(2/e) c^k k^(3k/2) with c = (1/6)(3/e)^(3/2). For eyeballing growth
/// only; everything else in this module is exact.
pub fn cubic_labelled_asymptotic(k: usize) -> f64 {
    let e = std::f64::consts::E;
    let c = (1.0 / 6.0) * (3.0f64 / e).powf(1.5);
    (2.0 / e).sqrt() * c.powi(k as i32) * (k as f64).powf(1.5 * k as f64)
}

// ---------------------------------------------------------------------------
// Bound evaluators
// ---------------------------------------------------------------------------

/// Lower bound on connected graphs of cycle rank at most h:
/// n^(n-2) ((n^2-3n) / (2(n+h)))^h, valid for n >= 1 and 0 <= 2h <= n^2-5n.
pub fn connected_low_rank_lower_bound(n: usize, h: usize) -> Result<BigRational> {
    if n < 1 || (2 * h) as i64 > (n * n) as i64 - 5 * n as i64 {
        return Err(Error::OutOfValidityRange {
            name: "connected low-cycle-rank lower bound".into(),
            detail: format!("needs n >= 1 and 2h <= n^2 - 5n; got n = {n}, h = {h}"),
        });
    }
    let base = BigRational::new(
        BigInt::from((n * n - 3 * n) as u64),
        BigInt::from(2 * (n + h) as u64),
    );
    let mut out = BigRational::from_integer(BigInt::from(n as u64).pow((n - 2).max(0) as u32));
    if n == 1 {
        // n^(n-2) = 1/n for n = 1.
        out = BigRational::one();
    }
    for _ in 0..h {
        out *= &base;
    }
    Ok(out)
}

/// The two-sided estimate (c n^2/(n+h))^(n+h) for graphs embeddable with
/// Euler genus at most h: lower constant 1/14, upper constant 8; valid for
/// n >= 1 and 0 <= h <= n^2.
pub fn embeddable_estimate(n: usize, h: usize, upper: bool) -> Result<BigRational> {
    if n < 1 || h > n * n {
        return Err(Error::OutOfValidityRange {
            name: "embeddable-class estimate".into(),
            detail: format!("needs n >= 1 and h <= n^2; got n = {n}, h = {h}"),
        });
    }
    let c = if upper { big(8) } else { BigRational::new(BigInt::one(), BigInt::from(14)) };
    let base = c * BigRational::new(BigInt::from((n * n) as u64), BigInt::from((n + h) as u64));
    let mut out = BigRational::one();
    for _ in 0..(n + h) {
        out *= &base;
    }
    Ok(out)
}

/// Upper bound 2^(4n+3h) h^h on unicellular-map-like counts (h^h = 1 at 0).
pub fn unicellular_upper_bound(n: usize, h: usize) -> BigInt {
    let mut out = BigInt::from(2u32).pow((4 * n + 3 * h) as u32);
    if h > 0 {
        out *= BigInt::from(h as u64).pow(h as u32);
    }
    out
}

/// Number of ways to place l marks among n+h-2 insertion positions.
pub fn insertion_count(n: usize, h: usize, l: usize) -> BigInt {
    binomial((n + h) as i64 - 2, l as i64)
}

/// Maximum edges of a simple graph embeddable with Euler genus h: 3(n+h-2).
pub fn embeddable_edge_bound(n: usize, h: usize) -> i64 {
    3 * (n as i64 + h as i64 - 2)
}

/// The one-vertex-extension ratio (C(n,2) - 3(n+h)) / (3(n+h)), exact.
pub fn extension_growth_factor(n: usize, h: usize) -> BigRational {
    let c2 = BigInt::from((n * (n - 1) / 2) as u64);
    let d = BigInt::from(3 * (n + h) as u64);
    BigRational::new(c2 - &d, d)
}

// ---------------------------------------------------------------------------
// Outward-rounded rational intervals for logarithms
// ---------------------------------------------------------------------------

/// A closed interval with exact rational endpoints, rounded outward.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        self.mul(&RatInterval::point(c.clone()))
    }

    /// Division; the divisor interval must not contain zero.
    pub fn div(&self, o: &RatInterval) -> Result<RatInterval> {
        if !o.lo.is_positive() && !o.hi.is_negative() {
            return Err(Error::Precondition("interval division by zero".into()));
        }
        let inv = RatInterval {
            lo: o.hi.recip(),
            hi: o.lo.recip(),
        };
        Ok(self.mul(&inv))
    }

    /// The unique integer at or below every point of the interval, if the
    /// floor is unambiguous; otherwise the interval straddles an integer.
    pub fn floor_exact(&self) -> Result<BigInt> {
        let lo = self.lo.floor().to_integer();
        let hi = self.hi.floor().to_integer();
        if lo == hi {
            Ok(lo)
        } else {
            Err(Error::IntervalStraddlesInteger { width: self.width().to_string() })
        }
    }

    pub fn ceil_exact(&self) -> Result<BigInt> {
        let lo = self.lo.ceil().to_integer();
        let hi = self.hi.ceil().to_integer();
        if lo == hi {
            Ok(lo)
        } else {
            Err(Error::IntervalStraddlesInteger { width: self.width().to_string() })
        }
    }
}

/// atanh(t) = sum t^(2i+1)/(2i+1) for |t| < 1 with the outward remainder
/// bound t^(2N+1) / ((2N+1)(1 - t^2)); t must be in [0, 1).
fn atanh_interval(t: &BigRational, terms: usize) -> RatInterval {
    let t2 = t * t;
    let mut sum = BigRational::zero();
    let mut pow = t.clone();
    for i in 0..terms {
        sum += &pow / big(2 * i as i64 + 1);
        pow *= &t2;
    }
    // pow is now t^(2*terms+1).
    let rem = pow / (big(2 * terms as i64 + 1) * (BigRational::one() - t2));
    RatInterval { lo: sum.clone(), hi: sum + rem }
}

/// ln 2 = 2 atanh(1/3).
pub fn ln2_interval(terms: usize) -> RatInterval {
    atanh_interval(&BigRational::new(BigInt::one(), BigInt::from(3)), terms).scale(&big(2))
}

/// Natural log of a positive rational as an outward-rounded interval:
/// reduce to [1, 2) by powers of two, then ln m = 2 atanh((m-1)/(m+1)).
pub fn ln_interval(x: &BigRational, terms: usize) -> Result<RatInterval> {
    if !x.is_positive() {
        return Err(Error::Precondition("ln of a non-positive rational".into()));
    }
    let two = big(2);
    let mut m = x.clone();
    let mut k: i64 = 0;
    while m >= two {
        m /= &two;
        k += 1;
    }
    while m < BigRational::one() {
        m *= &two;
        k -= 1;
    }
    let t = (&m - BigRational::one()) / (&m + BigRational::one());
    let ln_m = atanh_interval(&t, terms).scale(&two);
    Ok(ln2_interval(terms).scale(&big(k)).add(&ln_m))
}

/// Binary entropy -p log2 p - (1-p) log2 (1-p) as an interval; exact at the
/// endpoints and at p = 1/2.
pub fn entropy_interval(p: &BigRational, terms: usize) -> Result<RatInterval> {
    if p.is_negative() || p > &BigRational::one() {
        return Err(Error::Precondition("entropy needs p in [0, 1]".into()));
    }
    if p.is_zero() || p == &BigRational::one() {
        return Ok(RatInterval::point(BigRational::zero()));
    }
    if p == &BigRational::new(BigInt::one(), BigInt::from(2)) {
        return Ok(RatInterval::point(BigRational::one()));
    }
    let q = BigRational::one() - p;
    let ln2 = ln2_interval(terms);
    let lp = ln_interval(p, terms)?;
    let lq = ln_interval(&q, terms)?;
    // H = -(p ln p + q ln q)/ln 2.
    let num = lp.scale(p).add(&lq.scale(&q)).neg();
    num.div(&ln2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn unicellular_collapses_to_catalan_at_genus_zero() {
        for (n, cat) in [(1i64, 1i64), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)] {
            for idx in [CompositionIndexing::Euler, CompositionIndexing::Genus] {
                assert_eq!(
                    unicellular_orientable_rooted(n as usize, 0, idx).unwrap(),
                    rat(cat, 1)
                );
            }
        }
    }

    #[test]
    fn unicellular_formula_matches_oracle_under_genus_indexing() {
        for (n, h) in [(1, 2), (2, 2), (3, 2), (1, 4), (2, 4), (4, 2), (3, 0), (5, 0)] {
            let oracle = unicellular_orientable_oracle(n, h).unwrap();
            let genus =
                unicellular_orientable_rooted(n, h, CompositionIndexing::Genus).unwrap();
            assert_eq!(genus, oracle, "(n, h) = ({n}, {h})");
            assert!(oracle.is_integer(), "(n, h) = ({n}, {h})");
        }
        // The other indexing disagrees (and is not even integral) at (1, 2).
        let euler = unicellular_orientable_rooted(1, 2, CompositionIndexing::Euler).unwrap();
        assert_eq!(euler, rat(3, 5));
        assert!(!euler.is_integer());
    }

    #[test]
    fn unicellular_odd_euler_genus_is_zero_for_orientable() {
        assert!(unicellular_orientable_rooted(2, 1, CompositionIndexing::Genus)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn precubic_closed_form_values() {
        assert_eq!(precubic_nonorientable_rooted(5, 2).unwrap(), rat(6, 1));
        assert!(precubic_nonorientable_rooted(3, 2).unwrap().is_zero());
        assert_eq!(precubic_nonorientable_rooted(7, 2).unwrap(), rat(60, 1));
        assert!(precubic_nonorientable_rooted(4, 2).is_err());
        assert!(precubic_nonorientable_rooted(5, 3).is_err());
    }

    #[test]
    fn precubic_oracle() {
        assert!(precubic_nonorientable_oracle(3, 2).unwrap().is_zero());
        assert_eq!(precubic_nonorientable_oracle(5, 2).unwrap(), rat(6, 1));
    }

    #[test]
    fn dissections_match_oracle_and_closed_form() {
        for k in 3..=7 {
            let max_j = k * (k - 3) / 2;
            for j in 0..=max_j.min(6) {
                let dp = dissection_count(k, j).unwrap();
                assert_eq!(dp, dissection_count_oracle(k, j).unwrap(), "k={k} j={j}");
                assert_eq!(dp, dissection_closed_form(k, j), "k={k} j={j}");
            }
        }
        assert_eq!(dissection_count(4, 1).unwrap(), BigInt::from(2));
        assert_eq!(dissection_count(5, 1).unwrap(), BigInt::from(5));
        assert_eq!(dissection_count(5, 2).unwrap(), BigInt::from(5));
        assert_eq!(dissection_count(8, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn cubic_counts() {
        assert_eq!(cubic_labelled_count(2).unwrap(), BigInt::zero());
        assert_eq!(cubic_labelled_count(4).unwrap(), BigInt::one());
        assert_eq!(cubic_labelled_count(5).unwrap(), BigInt::zero());
        assert_eq!(cubic_labelled_count(6).unwrap(), BigInt::from(70));
        // The float comparator tracks growth, not the constant: it should
        // stay within one order of magnitude at this size.
        let exact = 70.0f64;
        let approx = cubic_labelled_asymptotic(6);
        assert!(approx / exact > 0.1 && approx / exact < 10.0);
    }

    #[test]
    fn bound_evaluators() {
        assert_eq!(
            connected_low_rank_lower_bound(5, 0).unwrap(),
            rat(125, 1)
        );
        assert!(connected_low_rank_lower_bound(4, 3).is_err());
        // (c1 n^2/(n+h))^(n+h) with c1 = 1/14 at n = 5, h = 0 is (25/70)^5.
        let lower = embeddable_estimate(5, 0, false).unwrap();
        let mut direct = BigRational::one();
        for _ in 0..5 {
            direct *= rat(25, 70);
        }
        assert_eq!(lower, direct);
        assert_eq!(embeddable_edge_bound(4, 0), 6);
        assert_eq!(insertion_count(4, 0, 2), BigInt::one());
        assert_eq!(extension_growth_factor(7, 0), rat(21 - 21, 21));
    }

    #[test]
    fn log_intervals() {
        let ln2 = ln2_interval(20);
        assert!(ln2.lo < rat(693148, 1000000));
        assert!(ln2.hi > rat(693147, 1000000));
        assert!(ln2.width() < rat(1, 1_000_000_000));
        let l10 = ln_interval(&rat(10, 1), 20).unwrap();
        assert!(l10.lo < rat(2302586, 1000000) && l10.hi > rat(2302585, 1000000));
        // floor(0.5 * 100 / ln 100) = floor(10.857...) = 10.
        let x = rat(50, 1).clone();
        let v = RatInterval::point(x).div(&ln_interval(&rat(100, 1), 25).unwrap()).unwrap();
        assert_eq!(v.floor_exact().unwrap(), BigInt::from(10));
        assert_eq!(
            entropy_interval(&rat(1, 2), 10).unwrap(),
            RatInterval::point(BigRational::one())
        );
        let h = entropy_interval(&rat(1, 4), 25).unwrap();
        // H(1/4) = 0.81127812...
        assert!(h.lo < rat(811279, 1000000) && h.hi > rat(811278, 1000000));
    }
    #[test]
    fn precubic_oracle_cross_validation() {
        assert_eq!(precubic_nonorientable_oracle(7, 2).unwrap(), rat(60, 1));
    }
}
