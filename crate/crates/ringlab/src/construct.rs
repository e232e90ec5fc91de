//! Builders for every finite ring family in play: Z_n, direct products,
//! matrix rings (full / upper triangular / constant-diagonal triangular),
//! trivial extensions, truncated polynomial quotients, the twisted 2x2 and
//! n x n formal matrix rings, formal triangular matrix rings, and group
//! rings over abelian groups, plus the augmentation machinery.
//!
//! Every construction encodes its structured elements into the dense index
//! carrier; operation tables are materialized eagerly below the configured
//! bound and evaluated through the structural kernel above it.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::ring::{
    FiniteRing, Kernel, DEFAULT_CARRIER_CAP, DEFAULT_MATERIALIZE_BOUND, DEFAULT_VALIDATE_BOUND,
};

#[derive(Debug, Clone)]
pub struct BuildConfig {
    pub carrier_cap: usize,
    pub materialize_bound: usize,
    pub validate_bound: usize,
    pub seed: u64,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            carrier_cap: DEFAULT_CARRIER_CAP,
            materialize_bound: DEFAULT_MATERIALIZE_BOUND,
            validate_bound: DEFAULT_VALIDATE_BOUND,
            seed: 0,
        }
    }
}

pub type Ring = Arc<FiniteRing>;

const MAX_ENTRIES: usize = 36;

fn checked_size(label: &str, base: usize, entries: u32, cap: usize) -> Result<usize> {
    let required = (base as u128).checked_pow(entries).unwrap_or(u128::MAX);
    if required > cap as u128 {
        return Err(RingError::Capacity {
            label: label.to_string(),
            required,
            cap,
        });
    }
    Ok(required as usize)
}

#[inline]
fn encode(coords: &[usize], radix: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * radix + c)
}

#[inline]
fn decode_into(mut idx: usize, radix: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % radix;
        idx /= radix;
    }
}

fn finish(label: String, kernel: Arc<dyn Kernel>, cfg: &BuildConfig) -> Ring {
    Arc::new(FiniteRing::from_kernel(label, kernel, cfg.materialize_bound))
}

// ---------------------------------------------------------------------------
// Z_n

struct ZnKernel {
    n: usize,
}

impl Kernel for ZnKernel {
    fn size(&self) -> usize {
        self.n
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        1 % self.n
    }
    fn add(&self, a: usize, b: usize) -> usize {
        (a + b) % self.n
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        (a * b) % self.n
    }
    fn neg(&self, a: usize) -> usize {
        (self.n - a) % self.n
    }
}

/// Integers mod n. n = 1 gives the zero ring.
pub fn build_zn(n: usize, cfg: &BuildConfig) -> Result<Ring> {
    if n == 0 {
        return Err(RingError::input("Zn(n) requires n >= 1"));
    }
    checked_size("Zn", n, 1, cfg.carrier_cap)?;
    Ok(finish(format!("Zn({n})"), Arc::new(ZnKernel { n }), cfg))
}

// ---------------------------------------------------------------------------
// direct products

struct ProductKernel {
    factors: Vec<Ring>,
    sizes: Vec<usize>,
}

impl ProductKernel {
    fn split(&self, mut idx: usize, out: &mut [usize]) {
        for (slot, &s) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = idx % s;
            idx /= s;
        }
    }
    fn join(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.sizes)
            .fold(0, |acc, (&c, &s)| acc * s + c)
    }
    fn zip_op(&self, a: usize, b: usize, f: impl Fn(&FiniteRing, usize, usize) -> usize) -> usize {
        let k = self.factors.len();
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        self.split(a, &mut ca[..k]);
        self.split(b, &mut cb[..k]);
        let mut out = [0usize; MAX_ENTRIES];
        for i in 0..k {
            out[i] = f(&self.factors[i], ca[i], cb[i]);
        }
        self.join(&out[..k])
    }
}

impl Kernel for ProductKernel {
    fn size(&self) -> usize {
        self.sizes.iter().product()
    }
    fn zero(&self) -> usize {
        let coords: Vec<usize> = self.factors.iter().map(|r| r.zero()).collect();
        self.join(&coords)
    }
    fn one(&self) -> usize {
        let coords: Vec<usize> = self.factors.iter().map(|r| r.one()).collect();
        self.join(&coords)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.zip_op(a, b, |r, x, y| r.add(x, y))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.zip_op(a, b, |r, x, y| r.mul(x, y))
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.factors.len();
        let mut ca = [0usize; MAX_ENTRIES];
        self.split(a, &mut ca[..k]);
        let mut out = [0usize; MAX_ENTRIES];
        for i in 0..k {
            out[i] = self.factors[i].neg(ca[i]);
        }
        self.join(&out[..k])
    }
    fn describe(&self, x: usize) -> String {
        let k = self.factors.len();
        let mut c = [0usize; MAX_ENTRIES];
        self.split(x, &mut c[..k]);
        let parts: Vec<String> = (0..k).map(|i| self.factors[i].describe(c[i])).collect();
        format!("({})", parts.join(","))
    }
}

/// Componentwise product of the given factors, lexicographic index encoding.
pub fn build_product(factors: Vec<Ring>, cfg: &BuildConfig) -> Result<Ring> {
    if factors.is_empty() {
        return Err(RingError::input("Prod requires at least one factor"));
    }
    if factors.len() > MAX_ENTRIES {
        return Err(RingError::input("Prod supports at most 36 factors"));
    }
    let required: u128 = factors.iter().map(|r| r.size() as u128).product();
    if required > cfg.carrier_cap as u128 {
        return Err(RingError::Capacity {
            label: "Prod".into(),
            required,
            cap: cfg.carrier_cap,
        });
    }
    let label = format!(
        "Prod({})",
        factors
            .iter()
            .map(|r| r.label().to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let sizes = factors.iter().map(|r| r.size()).collect();
    Ok(finish(label, Arc::new(ProductKernel { factors, sizes }), cfg))
}

// ---------------------------------------------------------------------------
// matrix rings

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixShape {
    /// M_n(R)
    Full,
    /// T_n(R), upper triangular
    Upper,
    /// S_n(R), upper triangular with constant diagonal
    UpperConstDiag,
}

struct MatrixKernel {
    base: Ring,
    n: usize,
    shape: MatrixShape,
    /// free entry positions in row-major order; for UpperConstDiag the
    /// shared diagonal value comes first, then the strict upper entries
    positions: Vec<(usize, usize)>,
}

impl MatrixKernel {
    fn to_grid(&self, idx: usize, grid: &mut [usize]) {
        let k = self.positions.len();
        let mut coords = [0usize; MAX_ENTRIES];
        decode_into(idx, self.base.size(), &mut coords[..k]);
        let z = self.base.zero();
        grid[..self.n * self.n].fill(z);
        match self.shape {
            MatrixShape::UpperConstDiag => {
                for i in 0..self.n {
                    grid[i * self.n + i] = coords[0];
                }
                for (c, &(i, j)) in coords[1..k].iter().zip(&self.positions[1..]) {
                    grid[i * self.n + j] = *c;
                }
            }
            _ => {
                for (c, &(i, j)) in coords[..k].iter().zip(&self.positions) {
                    grid[i * self.n + j] = *c;
                }
            }
        }
    }

    fn from_grid(&self, grid: &[usize]) -> usize {
        let mut coords = [0usize; MAX_ENTRIES];
        for (slot, &(i, j)) in coords.iter_mut().zip(&self.positions) {
            *slot = grid[i * self.n + j];
        }
        encode(&coords[..self.positions.len()], self.base.size())
    }
}

impl Kernel for MatrixKernel {
    fn size(&self) -> usize {
        self.base.size().pow(self.positions.len() as u32)
    }
    fn zero(&self) -> usize {
        let coords = [self.base.zero(); MAX_ENTRIES];
        encode(&coords[..self.positions.len()], self.base.size())
    }
    fn one(&self) -> usize {
        let n = self.n;
        let mut grid = [0usize; MAX_ENTRIES];
        grid[..n * n].fill(self.base.zero());
        for i in 0..n {
            grid[i * n + i] = self.base.one();
        }
        self.from_grid(&grid[..n * n])
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut ga = [0usize; MAX_ENTRIES];
        let mut gb = [0usize; MAX_ENTRIES];
        self.to_grid(a, &mut ga);
        self.to_grid(b, &mut gb);
        for i in 0..n * n {
            ga[i] = self.base.add(ga[i], gb[i]);
        }
        self.from_grid(&ga[..n * n])
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut ga = [0usize; MAX_ENTRIES];
        let mut gb = [0usize; MAX_ENTRIES];
        let mut gc = [0usize; MAX_ENTRIES];
        self.to_grid(a, &mut ga);
        self.to_grid(b, &mut gb);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.base.zero();
                for k in 0..n {
                    acc = self.base.add(acc, self.base.mul(ga[i * n + k], gb[k * n + j]));
                }
                gc[i * n + j] = acc;
            }
        }
        self.from_grid(&gc[..n * n])
    }
    fn neg(&self, a: usize) -> usize {
        let n = self.n;
        let mut g = [0usize; MAX_ENTRIES];
        self.to_grid(a, &mut g);
        for v in g[..n * n].iter_mut() {
            *v = self.base.neg(*v);
        }
        self.from_grid(&g[..n * n])
    }
    fn describe(&self, x: usize) -> String {
        let n = self.n;
        let mut g = [0usize; MAX_ENTRIES];
        self.to_grid(x, &mut g);
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let cells: Vec<String> =
                    (0..n).map(|j| self.base.describe(g[i * n + j])).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// M_n(R), T_n(R) or S_n(R) with row-major entry encoding over the free entries.
pub fn build_matrix(base: Ring, n: usize, shape: MatrixShape, cfg: &BuildConfig) -> Result<Ring> {
    if n == 0 {
        return Err(RingError::input("matrix dimension must be >= 1"));
    }
    let positions: Vec<(usize, usize)> = match shape {
        MatrixShape::Full => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
        MatrixShape::Upper => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
        MatrixShape::UpperConstDiag => std::iter::once((0, 0))
            .chain((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .collect(),
    };
    if positions.len() > MAX_ENTRIES || n * n > MAX_ENTRIES {
        return Err(RingError::input("matrix dimension too large"));
    }
    let tag = match shape {
        MatrixShape::Full => "M",
        MatrixShape::Upper => "T",
        MatrixShape::UpperConstDiag => "S",
    };
    let label = format!("{tag}({n},{})", base.label());
    checked_size(&label, base.size(), positions.len() as u32, cfg.carrier_cap)?;
    let kernel = MatrixKernel {
        base,
        n,
        shape,
        positions,
    };
    Ok(finish(label, Arc::new(kernel), cfg))
}

// ---------------------------------------------------------------------------
// bimodules, trivial extensions, formal triangular matrix rings

/// Explicit table for a finite (R,S)-bimodule.
pub struct BimoduleTable {
    pub size: usize,
    pub zero: usize,
    pub label: String,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// left[r * size + m] = r . m
    left: Vec<u16>,
    /// right[m * s_size + s] = m . s
    right: Vec<u16>,
    s_size: usize,
}

impl BimoduleTable {
    pub fn new(
        label: impl Into<String>,
        size: usize,
        zero: usize,
        add: Vec<usize>,
        left: Vec<usize>,
        right: Vec<usize>,
        r_size: usize,
        s_size: usize,
    ) -> Result<BimoduleTable> {
        let label = label.into();
        if size == 0 || add.len() != size * size || left.len() != r_size * size
            || right.len() != size * s_size
        {
            return Err(RingError::input(format!("bad bimodule table shapes for {label}")));
        }
        let mut neg = vec![u16::MAX; size];
        for a in 0..size {
            match (0..size).find(|&b| add[a * size + b] == zero) {
                Some(b) => neg[a] = b as u16,
                None => {
                    return Err(RingError::Validation {
                        label,
                        law: "module additive inverse",
                        witness: (a, 0, 0),
                    })
                }
            }
        }
        Ok(BimoduleTable {
            size,
            zero,
            label,
            add: add.into_iter().map(|v| v as u16).collect(),
            neg,
            left: left.into_iter().map(|v| v as u16).collect(),
            right: right.into_iter().map(|v| v as u16).collect(),
            s_size,
        })
    }

    /// The regular (R,R)-bimodule M = R.
    pub fn regular(r: &Ring) -> BimoduleTable {
        let n = r.size();
        let add = (0..n * n).map(|i| r.add(i / n, i % n)).collect();
        let act: Vec<usize> = (0..n * n).map(|i| r.mul(i / n, i % n)).collect();
        BimoduleTable::new("regular", n, r.zero(), add, act.clone(), act, n, n)
            .expect("regular bimodule tables are well formed")
    }

    /// The zero (R,S)-bimodule.
    pub fn zero_module(r_size: usize, s_size: usize) -> BimoduleTable {
        BimoduleTable::new(
            "zero",
            1,
            0,
            vec![0],
            vec![0; r_size],
            vec![0; s_size],
            r_size,
            s_size,
        )
        .expect("zero bimodule tables are well formed")
    }

    #[inline]
    pub fn madd(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }
    #[inline]
    pub fn mneg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
    #[inline]
    pub fn left_act(&self, r: usize, m: usize) -> usize {
        self.left[r * self.size + m] as usize
    }
    #[inline]
    pub fn right_act(&self, m: usize, s: usize) -> usize {
        self.right[m * self.s_size + s] as usize
    }

    /// Exhaustively check the bimodule axioms against the acting rings.
    pub fn validate(&self, r: &FiniteRing, s: &FiniteRing) -> Result<()> {
        let fail = |law, w| {
            Err(RingError::Validation {
                label: self.label.clone(),
                law,
                witness: w,
            })
        };
        let n = self.size;
        for a in 0..n {
            if self.madd(a, self.zero) != a {
                return fail("module additive identity", (a, 0, 0));
            }
            if self.madd(a, self.mneg(a)) != self.zero {
                return fail("module additive inverse", (a, 0, 0));
            }
            for b in 0..n {
                if self.madd(a, b) != self.madd(b, a) {
                    return fail("module add commutative", (a, b, 0));
                }
                for c in 0..n {
                    if self.madd(self.madd(a, b), c) != self.madd(a, self.madd(b, c)) {
                        return fail("module add associative", (a, b, c));
                    }
                }
            }
        }
        for m in 0..n {
            if self.left_act(r.one(), m) != m {
                return fail("left action unital", (m, 0, 0));
            }
            if self.right_act(m, s.one()) != m {
                return fail("right action unital", (m, 0, 0));
            }
        }
        for rr in 0..r.size() {
            for m in 0..n {
                for m2 in 0..n {
                    if self.left_act(rr, self.madd(m, m2))
                        != self.madd(self.left_act(rr, m), self.left_act(rr, m2))
                    {
                        return fail("left action additive in module", (rr, m, m2));
                    }
                }
                for r2 in 0..r.size() {
                    if self.left_act(r.add(rr, r2), m)
                        != self.madd(self.left_act(rr, m), self.left_act(r2, m))
                    {
                        return fail("left action additive in ring", (rr, r2, m));
                    }
                    if self.left_act(r.mul(rr, r2), m) != self.left_act(rr, self.left_act(r2, m)) {
                        return fail("left action associative", (rr, r2, m));
                    }
                }
            }
        }
        for ss in 0..s.size() {
            for m in 0..n {
                for m2 in 0..n {
                    if self.right_act(self.madd(m, m2), ss)
                        != self.madd(self.right_act(m, ss), self.right_act(m2, ss))
                    {
                        return fail("right action additive in module", (ss, m, m2));
                    }
                }
                for s2 in 0..s.size() {
                    if self.right_act(m, s.mul(ss, s2))
                        != self.right_act(self.right_act(m, ss), s2)
                    {
                        return fail("right action associative", (ss, s2, m));
                    }
                }
            }
        }
        // (r m) s = r (m s)
        for rr in 0..r.size() {
            for m in 0..n {
                for ss in 0..s.size() {
                    if self.right_act(self.left_act(rr, m), ss)
                        != self.left_act(rr, self.right_act(m, ss))
                    {
                        return fail("action compatibility", (rr, m, ss));
                    }
                }
            }
        }
        Ok(())
    }
}

struct TrivExtKernel {
    base: Ring,
    module: Arc<BimoduleTable>,
}

impl TrivExtKernel {
    fn split(&self, idx: usize) -> (usize, usize) {
        (idx / self.module.size, idx % self.module.size)
    }
    fn join(&self, r: usize, m: usize) -> usize {
        r * self.module.size + m
    }
}

impl Kernel for TrivExtKernel {
    fn size(&self) -> usize {
        self.base.size() * self.module.size
    }
    fn zero(&self) -> usize {
        self.join(self.base.zero(), self.module.zero)
    }
    fn one(&self) -> usize {
        self.join(self.base.one(), self.module.zero)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let (r1, m1) = self.split(a);
        let (r2, m2) = self.split(b);
        self.join(self.base.add(r1, r2), self.module.madd(m1, m2))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let (r1, m1) = self.split(a);
        let (r2, m2) = self.split(b);
        // (r, m)(r', m') = (rr', r m' + m r')
        self.join(
            self.base.mul(r1, r2),
            self.module
                .madd(self.module.left_act(r1, m2), self.module.right_act(m1, r2)),
        )
    }
    fn neg(&self, a: usize) -> usize {
        let (r, m) = self.split(a);
        self.join(self.base.neg(r), self.module.mneg(m))
    }
    fn describe(&self, x: usize) -> String {
        let (r, m) = self.split(x);
        format!("({},{m})", self.base.describe(r))
    }
}

/// Trivial extension R ∝ M; with no module given, M is the regular bimodule R.
pub fn build_trivial_extension(
    base: Ring,
    module: Option<BimoduleTable>,
    cfg: &BuildConfig,
) -> Result<Ring> {
    let module = match module {
        Some(m) => {
            m.validate(&base, &base)?;
            m
        }
        None => BimoduleTable::regular(&base),
    };
    let label = format!("Triv({})", base.label());
    let required = base.size() as u128 * module.size as u128;
    if required > cfg.carrier_cap as u128 {
        return Err(RingError::Capacity {
            label,
            required,
            cap: cfg.carrier_cap,
        });
    }
    Ok(finish(
        label,
        Arc::new(TrivExtKernel {
            base,
            module: Arc::new(module),
        }),
        cfg,
    ))
}

struct TriangularKernel {
    left_ring: Ring,
    right_ring: Ring,
    module: Arc<BimoduleTable>,
}

impl TriangularKernel {
    fn split(&self, idx: usize) -> (usize, usize, usize) {
        let s = idx % self.right_ring.size();
        let rest = idx / self.right_ring.size();
        (rest / self.module.size, rest % self.module.size, s)
    }
    fn join(&self, r: usize, m: usize, s: usize) -> usize {
        (r * self.module.size + m) * self.right_ring.size() + s
    }
}

impl Kernel for TriangularKernel {
    fn size(&self) -> usize {
        self.left_ring.size() * self.module.size * self.right_ring.size()
    }
    fn zero(&self) -> usize {
        self.join(self.left_ring.zero(), self.module.zero, self.right_ring.zero())
    }
    fn one(&self) -> usize {
        self.join(self.left_ring.one(), self.module.zero, self.right_ring.one())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let (r1, m1, s1) = self.split(a);
        let (r2, m2, s2) = self.split(b);
        self.join(
            self.left_ring.add(r1, r2),
            self.module.madd(m1, m2),
            self.right_ring.add(s1, s2),
        )
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let (r1, m1, s1) = self.split(a);
        let (r2, m2, s2) = self.split(b);
        // (r, m, s)(r', m', s') = (rr', r m' + m s', ss')
        self.join(
            self.left_ring.mul(r1, r2),
            self.module
                .madd(self.module.left_act(r1, m2), self.module.right_act(m1, s2)),
            self.right_ring.mul(s1, s2),
        )
    }
    fn neg(&self, a: usize) -> usize {
        let (r, m, s) = self.split(a);
        self.join(self.left_ring.neg(r), self.module.mneg(m), self.right_ring.neg(s))
    }
    fn describe(&self, x: usize) -> String {
        let (r, m, s) = self.split(x);
        format!(
            "[[{},{m}],[0,{}]]",
            self.left_ring.describe(r),
            self.right_ring.describe(s)
        )
    }
}

/// Formal triangular matrix ring T(R, S, M) over an (R,S)-bimodule M.
pub fn build_formal_triangular(
    r: Ring,
    s: Ring,
    module: BimoduleTable,
    cfg: &BuildConfig,
) -> Result<Ring> {
    module.validate(&r, &s)?;
    let label = format!("TT({},{},{})", r.label(), s.label(), module.label);
    let required = r.size() as u128 * module.size as u128 * s.size() as u128;
    if required > cfg.carrier_cap as u128 {
        return Err(RingError::Capacity {
            label,
            required,
            cap: cfg.carrier_cap,
        });
    }
    Ok(finish(
        label,
        Arc::new(TriangularKernel {
            left_ring: r,
            right_ring: s,
            module: Arc::new(module),
        }),
        cfg,
    ))
}

// ---------------------------------------------------------------------------
// truncated polynomial quotients R_n, A_{n,m}, B_{n,m}

struct RnKernel {
    base: Ring,
    n: usize,
}

impl Kernel for RnKernel {
    fn size(&self) -> usize {
        self.base.size().pow(self.n as u32)
    }
    fn zero(&self) -> usize {
        let coords = vec![self.base.zero(); self.n];
        encode(&coords, self.base.size())
    }
    fn one(&self) -> usize {
        let mut coords = vec![self.base.zero(); self.n];
        coords[0] = self.base.one();
        encode(&coords, self.base.size())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..self.n]);
        decode_into(b, self.base.size(), &mut cb[..self.n]);
        for i in 0..self.n {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca[..self.n], self.base.size())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        let mut cc = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..self.n]);
        decode_into(b, self.base.size(), &mut cb[..self.n]);
        cc[..self.n].fill(self.base.zero());
        for i in 0..self.n {
            for j in 0..self.n - i {
                cc[i + j] = self.base.add(cc[i + j], self.base.mul(ca[i], cb[j]));
            }
        }
        encode(&cc[..self.n], self.base.size())
    }
    fn neg(&self, a: usize) -> usize {
        let mut ca = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..self.n]);
        for v in ca[..self.n].iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&ca[..self.n], self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(x, self.base.size(), &mut c[..self.n]);
        poly_string(&self.base, &c[..self.n], &["", "x", "x^2", "x^3", "x^4", "x^5"])
    }
}

fn poly_string(base: &FiniteRing, coords: &[usize], monomials: &[&str]) -> String {
    let mut out = String::new();
    for (c, mono) in coords.iter().zip(monomials) {
        if *c == base.zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if mono.is_empty() {
            let _ = write!(out, "{}", base.describe(*c));
        } else if *c == base.one() {
            out.push_str(mono);
        } else {
            let _ = write!(out, "{}{}", base.describe(*c), mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// R_n = R[x]/(x^n): truncated polynomials, constant coefficient first.
pub fn build_rn(base: Ring, n: usize, cfg: &BuildConfig) -> Result<Ring> {
    if n < 2 {
        return Err(RingError::input("Rn requires n >= 2"));
    }
    if n > 6 {
        return Err(RingError::input("Rn supports n <= 6"));
    }
    let label = format!("Rn({},{n})", base.label());
    checked_size(&label, base.size(), n as u32, cfg.carrier_cap)?;
    Ok(finish(label, Arc::new(RnKernel { base, n }), cfg))
}

/// A_{n,m}(R) = R[x,y | x^n = yx = y^m = 0], with xy = 0 imposed as well so
/// that {1, x^i, y^j} is a multiplicatively closed basis.
struct AnmKernel {
    base: Ring,
    n: usize,
    m: usize,
}

impl AnmKernel {
    fn width(&self) -> usize {
        1 + (self.n - 1) + (self.m - 1)
    }
}

impl Kernel for AnmKernel {
    fn size(&self) -> usize {
        self.base.size().pow(self.width() as u32)
    }
    fn zero(&self) -> usize {
        encode(&vec![self.base.zero(); self.width()], self.base.size())
    }
    fn one(&self) -> usize {
        let mut c = vec![self.base.zero(); self.width()];
        c[0] = self.base.one();
        encode(&c, self.base.size())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.width();
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        for i in 0..k {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca[..k], self.base.size())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.width();
        let (n, m) = (self.n, self.m);
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        let mut cc = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        cc[..k].fill(self.base.zero());
        // layout: [a, b_1..b_{n-1}, c_1..c_{m-1}]
        cc[0] = self.base.mul(ca[0], cb[0]);
        // x-part: a b'_i + b_i a' + sum_{p+q=i} b_p b'_q (x^n = 0 truncates)
        for i in 1..n {
            let mut acc = self.base.add(
                self.base.mul(ca[0], cb[i]),
                self.base.mul(ca[i], cb[0]),
            );
            for p in 1..i {
                acc = self.base.add(acc, self.base.mul(ca[p], cb[i - p]));
            }
            cc[i] = acc;
        }
        // y-part, same shape (xy = yx = 0 kills the cross terms)
        for j in 1..m {
            let mut acc = self.base.add(
                self.base.mul(ca[0], cb[n - 1 + j]),
                self.base.mul(ca[n - 1 + j], cb[0]),
            );
            for p in 1..j {
                acc = self.base.add(acc, self.base.mul(ca[n - 1 + p], cb[n - 1 + j - p]));
            }
            cc[n - 1 + j] = acc;
        }
        encode(&cc[..k], self.base.size())
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.width();
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut c[..k]);
        for v in c[..k].iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&c[..k], self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let k = self.width();
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(x, self.base.size(), &mut c[..k]);
        let monos: Vec<String> = std::iter::once(String::new())
            .chain((1..self.n).map(|i| if i == 1 { "x".into() } else { format!("x^{i}") }))
            .chain((1..self.m).map(|j| if j == 1 { "y".into() } else { format!("y^{j}") }))
            .collect();
        let refs: Vec<&str> = monos.iter().map(|s| s.as_str()).collect();
        poly_string(&self.base, &c[..k], &refs)
    }
}

pub fn build_anm(base: Ring, n: usize, m: usize, cfg: &BuildConfig) -> Result<Ring> {
    if n < 2 || m < 2 {
        return Err(RingError::input("Anm requires n, m >= 2"));
    }
    let width = 1 + (n - 1) + (m - 1);
    if width > MAX_ENTRIES {
        return Err(RingError::input("Anm degrees too large"));
    }
    let label = format!("Anm({},{n},{m})", base.label());
    checked_size(&label, base.size(), width as u32, cfg.carrier_cap)?;
    Ok(finish(label, Arc::new(AnmKernel { base, n, m }), cfg))
}

/// B_{n,m}(R) = R[x,y]/(x^n, y^m) with commuting variables; basis x^i y^j,
/// row-major on (i, j) with a_{00} first.
struct BnmKernel {
    base: Ring,
    n: usize,
    m: usize,
}

impl Kernel for BnmKernel {
    fn size(&self) -> usize {
        self.base.size().pow((self.n * self.m) as u32)
    }
    fn zero(&self) -> usize {
        encode(&vec![self.base.zero(); self.n * self.m], self.base.size())
    }
    fn one(&self) -> usize {
        let mut c = vec![self.base.zero(); self.n * self.m];
        c[0] = self.base.one();
        encode(&c, self.base.size())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.n * self.m;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        for i in 0..k {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca[..k], self.base.size())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.n * self.m;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        let mut cc = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        cc[..k].fill(self.base.zero());
        for i1 in 0..self.n {
            for j1 in 0..self.m {
                let x = ca[i1 * self.m + j1];
                if x == self.base.zero() {
                    continue;
                }
                for i2 in 0..self.n - i1 {
                    for j2 in 0..self.m - j1 {
                        let t = (i1 + i2) * self.m + (j1 + j2);
                        cc[t] = self.base.add(cc[t], self.base.mul(x, cb[i2 * self.m + j2]));
                    }
                }
            }
        }
        encode(&cc[..k], self.base.size())
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.n * self.m;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut c[..k]);
        for v in c[..k].iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&c[..k], self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let k = self.n * self.m;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(x, self.base.size(), &mut c[..k]);
        let monos: Vec<String> = (0..self.n)
            .flat_map(|i| {
                (0..self.m).map(move |j| {
                    let xs = match i {
                        0 => String::new(),
                        1 => "x".into(),
                        _ => format!("x^{i}"),
                    };
                    let ys = match j {
                        0 => String::new(),
                        1 => "y".into(),
                        _ => format!("y^{j}"),
                    };
                    format!("{xs}{ys}")
                })
            })
            .collect();
        let refs: Vec<&str> = monos.iter().map(|s| s.as_str()).collect();
        poly_string(&self.base, &c[..k], &refs)
    }
}

pub fn build_bnm(base: Ring, n: usize, m: usize, cfg: &BuildConfig) -> Result<Ring> {
    if n < 2 || m < 2 {
        return Err(RingError::input("Bnm requires n, m >= 2"));
    }
    if n * m > MAX_ENTRIES {
        return Err(RingError::input("Bnm degrees too large"));
    }
    let label = format!("Bnm({},{n},{m})", base.label());
    checked_size(&label, base.size(), (n * m) as u32, cfg.carrier_cap)?;
    Ok(finish(label, Arc::new(BnmKernel { base, n, m }), cfg))
}

// ---------------------------------------------------------------------------
// twisted generalized matrix rings K_s(R) and M_n(R; s)

struct KsKernel {
    base: Ring,
    s: usize,
}

impl Kernel for KsKernel {
    fn size(&self) -> usize {
        self.base.size().pow(4)
    }
    fn zero(&self) -> usize {
        encode(&[self.base.zero(); 4], self.base.size())
    }
    fn one(&self) -> usize {
        encode(
            &[self.base.one(), self.base.zero(), self.base.zero(), self.base.one()],
            self.base.size(),
        )
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let mut ca = [0usize; 4];
        let mut cb = [0usize; 4];
        decode_into(a, self.base.size(), &mut ca);
        decode_into(b, self.base.size(), &mut cb);
        for i in 0..4 {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca, self.base.size())
    }
    fn mul(&self, p: usize, q: usize) -> usize {
        let r = &self.base;
        let mut u = [0usize; 4];
        let mut v = [0usize; 4];
        decode_into(p, r.size(), &mut u);
        decode_into(q, r.size(), &mut v);
        let [a1, x1, y1, b1] = u;
        let [a2, x2, y2, b2] = v;
        let out = [
            r.add(r.mul(a1, a2), r.mul(self.s, r.mul(x1, y2))),
            r.add(r.mul(a1, x2), r.mul(x1, b2)),
            r.add(r.mul(y1, a2), r.mul(b1, y2)),
            r.add(r.mul(self.s, r.mul(y1, x2)), r.mul(b1, b2)),
        ];
        encode(&out, r.size())
    }
    fn neg(&self, a: usize) -> usize {
        let mut c = [0usize; 4];
        decode_into(a, self.base.size(), &mut c);
        for v in c.iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&c, self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let mut c = [0usize; 4];
        decode_into(x, self.base.size(), &mut c);
        format!(
            "[[{},{}],[{},{}]]",
            self.base.describe(c[0]),
            self.base.describe(c[1]),
            self.base.describe(c[2]),
            self.base.describe(c[3])
        )
    }
}

/// K_s(R): the 2x2 generalized matrix ring with twisted corner products.
pub fn build_ks(base: Ring, s: usize, cfg: &BuildConfig) -> Result<Ring> {
    if s >= base.size() {
        return Err(RingError::input(format!(
            "s = {s} out of range for {}",
            base.label()
        )));
    }
    if !base.element_sets().center[s] {
        return Err(RingError::input(format!(
            "Ks requires central s, but {s} is not central in {}",
            base.label()
        )));
    }
    let label = format!("Ks({},{s})", base.label());
    checked_size(&label, base.size(), 4, cfg.carrier_cap)?;
    Ok(finish(label, Arc::new(KsKernel { base, s }), cfg))
}

struct FormalMatrixKernel {
    base: Ring,
    n: usize,
    /// powers s^0, s^1, s^2: the twist exponent is always 0, 1 or 2
    spow: [usize; 3],
}

impl FormalMatrixKernel {
    /// exponent for the (i, k, j) term of the twisted product
    fn exponent(i: usize, k: usize, j: usize) -> usize {
        let d = |a: usize, b: usize| usize::from(a == b) as isize;
        (1 + d(i, j) - d(i, k) - d(k, j)) as usize
    }
}

impl Kernel for FormalMatrixKernel {
    fn size(&self) -> usize {
        self.base.size().pow((self.n * self.n) as u32)
    }
    fn zero(&self) -> usize {
        encode(&vec![self.base.zero(); self.n * self.n], self.base.size())
    }
    fn one(&self) -> usize {
        let mut c = vec![self.base.zero(); self.n * self.n];
        for i in 0..self.n {
            c[i * self.n + i] = self.base.one();
        }
        encode(&c, self.base.size())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.n * self.n;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        for i in 0..k {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca[..k], self.base.size())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.n;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        let mut cc = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..n * n]);
        decode_into(b, self.base.size(), &mut cb[..n * n]);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.base.zero();
                for k in 0..n {
                    let term = self.base.mul(
                        self.spow[Self::exponent(i, k, j)],
                        self.base.mul(ca[i * n + k], cb[k * n + j]),
                    );
                    acc = self.base.add(acc, term);
                }
                cc[i * n + j] = acc;
            }
        }
        encode(&cc[..n * n], self.base.size())
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.n * self.n;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut c[..k]);
        for v in c[..k].iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&c[..k], self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let n = self.n;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(x, self.base.size(), &mut c[..n * n]);
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let cells: Vec<String> =
                    (0..n).map(|j| self.base.describe(c[i * n + j])).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// M_n(R; s): the n x n formal matrix ring with delta-twisted products.
pub fn build_formal_matrix(base: Ring, n: usize, s: usize, cfg: &BuildConfig) -> Result<Ring> {
    if n < 2 {
        return Err(RingError::input("Ms requires n >= 2"));
    }
    if n * n > MAX_ENTRIES {
        return Err(RingError::input("Ms dimension too large"));
    }
    if s >= base.size() {
        return Err(RingError::input(format!(
            "s = {s} out of range for {}",
            base.label()
        )));
    }
    if !base.element_sets().center[s] {
        return Err(RingError::input(format!(
            "Ms requires central s, but {s} is not central in {}",
            base.label()
        )));
    }
    let label = format!("Ms({n},{},{s})", base.label());
    checked_size(&label, base.size(), (n * n) as u32, cfg.carrier_cap)?;
    let spow = [base.one(), s, base.mul(s, s)];
    Ok(finish(label, Arc::new(FormalMatrixKernel { base, n, spow }), cfg))
}

// ---------------------------------------------------------------------------
// finite groups and group rings

pub struct FiniteGroup {
    pub size: usize,
    pub identity: usize,
    op: Vec<u16>,
    inv: Vec<u16>,
    pub label: String,
    pub abelian: bool,
    names: Vec<String>,
}

impl FiniteGroup {
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b] as usize
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.op(acc, x);
            k += 1;
        }
        k
    }
    /// Is every element order a power of p?
    pub fn is_p_group(&self, p: usize) -> bool {
        (0..self.size).all(|x| {
            let mut o = self.element_order(x);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
    }
}

/// Direct product of cyclic groups C(n1) x C(n2) x ...
pub fn build_group(orders: &[usize]) -> Result<Arc<FiniteGroup>> {
    if orders.is_empty() || orders.iter().any(|&n| n == 0) {
        return Err(RingError::input("group orders must be positive"));
    }
    let size: usize = orders.iter().product();
    if size > 1 << 16 {
        return Err(RingError::input("group too large"));
    }
    let k = orders.len();
    let gens = ["g", "h", "k", "l", "u", "v"];
    if k > gens.len() {
        return Err(RingError::input("too many cyclic factors"));
    }
    let split = |mut idx: usize| -> Vec<usize> {
        let mut c = vec![0; k];
        for (slot, &n) in c.iter_mut().zip(orders).rev() {
            *slot = idx % n;
            idx /= n;
        }
        c
    };
    let join = |c: &[usize]| -> usize { c.iter().zip(orders).fold(0, |acc, (&v, &n)| acc * n + v) };
    let mut op = vec![0u16; size * size];
    for a in 0..size {
        let ca = split(a);
        for b in 0..size {
            let cb = split(b);
            let cc: Vec<usize> = ca
                .iter()
                .zip(&cb)
                .zip(orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect();
            op[a * size + b] = join(&cc) as u16;
        }
    }
    let inv: Vec<u16> = (0..size)
        .map(|a| {
            let c: Vec<usize> = split(a)
                .iter()
                .zip(orders)
                .map(|(&x, &n)| (n - x) % n)
                .collect();
            join(&c) as u16
        })
        .collect();
    let names: Vec<String> = (0..size)
        .map(|a| {
            let c = split(a);
            let mut s = String::new();
            for (i, &e) in c.iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(gens[i]),
                    _ => {
                        let _ = write!(s, "{}^{e}", gens[i]);
                    }
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            s
        })
        .collect();
    let label = orders
        .iter()
        .map(|n| format!("C({n})"))
        .collect::<Vec<_>>()
        .join("x");
    // always true for products of cyclics, but computed rather than asserted
    let abelian =
        (0..size).all(|a| (0..size).all(|b| op[a * size + b] == op[b * size + a]));
    Ok(Arc::new(FiniteGroup {
        size,
        identity: 0,
        op,
        inv,
        label,
        abelian,
        names,
    }))
}

struct GroupRingKernel {
    base: Ring,
    group: Arc<FiniteGroup>,
}

impl Kernel for GroupRingKernel {
    fn size(&self) -> usize {
        self.base.size().pow(self.group.size as u32)
    }
    fn zero(&self) -> usize {
        encode(&vec![self.base.zero(); self.group.size], self.base.size())
    }
    fn one(&self) -> usize {
        let mut c = vec![self.base.zero(); self.group.size];
        c[self.group.identity] = self.base.one();
        encode(&c, self.base.size())
    }
    fn add(&self, a: usize, b: usize) -> usize {
        let k = self.group.size;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        for i in 0..k {
            ca[i] = self.base.add(ca[i], cb[i]);
        }
        encode(&ca[..k], self.base.size())
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.group.size;
        let mut ca = [0usize; MAX_ENTRIES];
        let mut cb = [0usize; MAX_ENTRIES];
        let mut cc = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut ca[..k]);
        decode_into(b, self.base.size(), &mut cb[..k]);
        cc[..k].fill(self.base.zero());
        // convolution: c_h = sum over g1 g2 = h of a_{g1} b_{g2}
        for g1 in 0..k {
            if ca[g1] == self.base.zero() {
                continue;
            }
            for g2 in 0..k {
                let h = self.group.op(g1, g2);
                cc[h] = self.base.add(cc[h], self.base.mul(ca[g1], cb[g2]));
            }
        }
        encode(&cc[..k], self.base.size())
    }
    fn neg(&self, a: usize) -> usize {
        let k = self.group.size;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(a, self.base.size(), &mut c[..k]);
        for v in c[..k].iter_mut() {
            *v = self.base.neg(*v);
        }
        encode(&c[..k], self.base.size())
    }
    fn describe(&self, x: usize) -> String {
        let k = self.group.size;
        let mut c = [0usize; MAX_ENTRIES];
        decode_into(x, self.base.size(), &mut c[..k]);
        let monos: Vec<&str> = (0..k)
            .map(|g| {
                if g == self.group.identity {
                    ""
                } else {
                    self.group.name(g)
                }
            })
            .collect();
        poly_string(&self.base, &c[..k], &monos)
    }
    fn group_ring_parts(&self) -> Option<(&Ring, &Arc<FiniteGroup>)> {
        Some((&self.base, &self.group))
    }
}

/// Group ring RG: functions G -> R with convolution product.
pub fn build_group_ring(base: Ring, group: Arc<FiniteGroup>, cfg: &BuildConfig) -> Result<Ring> {
    if group.size > MAX_ENTRIES {
        return Err(RingError::input("group too large for a group ring carrier"));
    }
    let label = format!("RG({},{})", base.label(), group.label);
    checked_size(&label, base.size(), group.size as u32, cfg.carrier_cap)?;
    Ok(finish(label, Arc::new(GroupRingKernel { base, group }), cfg))
}

/// Coefficient sum of a group-ring element, as a base-ring index.
pub fn augmentation(ring: &FiniteRing, x: usize) -> Result<usize> {
    let kernel = ring
        .kernel()
        .and_then(|k| k.group_ring_parts().map(|(b, g)| (k.clone(), b.clone(), g.clone())));
    let (_, base, group) = kernel.ok_or_else(|| {
        RingError::input(format!("{} is not a group ring", ring.label()))
    })?;
    if x >= ring.size() {
        return Err(RingError::input(format!("element {x} out of range")));
    }
    let mut coords = [0usize; MAX_ENTRIES];
    decode_into(x, base.size(), &mut coords[..group.size]);
    Ok(coords[..group.size]
        .iter()
        .fold(base.zero(), |acc, &c| base.add(acc, c)))
}

/// Kernel of the augmentation map, as an index set.
pub fn augmentation_ideal(ring: &FiniteRing) -> Result<Vec<usize>> {
    let base_zero = {
        let (base, _) = ring
            .kernel()
            .and_then(|k| k.group_ring_parts())
            .ok_or_else(|| RingError::input(format!("{} is not a group ring", ring.label())))?;
        base.zero()
    };
    (0..ring.size())
        .filter_map(|x| match augmentation(ring, x) {
            Ok(v) => (v == base_zero).then_some(Ok(x)),
            Err(e) => Some(Err(e)),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// GF(4), used by the matrix-over-division-ring checks

/// The field with four elements: 0, 1, a, a+1 with a^2 = a+1.
pub fn build_gf4(cfg: &BuildConfig) -> Result<Ring> {
    let add: Vec<usize> = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
    let mul_table = [
        [0, 0, 0, 0], //
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ];
    let mul: Vec<usize> = (0..16).map(|i| mul_table[i / 4][i % 4]).collect();
    let ring = FiniteRing::from_tables("F4", 4, 0, 1, add, mul)?;
    let report = ring.validate(cfg.validate_bound, cfg.seed);
    debug_assert!(report.is_valid());
    Ok(Arc::new(ring))
}
