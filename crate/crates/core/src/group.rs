//! Explicit finite groups with canonical generating sets.
//!
//! Elements are indices `0..n-1` with `0` the identity. Multiplication is
//! stored as a full table for small orders, as a permutation action for the
//! symmetric and alternating families, and arithmetically for cyclic and
//! elementary abelian groups (where a table would be wasteful or, at the
//! permitted orders, impossible).

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

/// Full multiplication tables are only built up to this order.
pub const TABLE_CAP: usize = 512;
/// Symmetric/alternating groups are built on at most this many points.
pub const PERMUTATION_POINTS_CAP: usize = 8;
/// Elementary abelian groups are capped at this order.
pub const ELEMENTARY_ABELIAN_CAP: usize = 1 << 20;
/// Special linear groups are capped at this prime (|SL(2,7)| = 336).
pub const SL2_PRIME_CAP: usize = 7;
/// Groups above this order refuse JSON serialization (the table is n^2).
pub const JSON_TABLE_CAP: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("the given elements do not generate the group")]
    NotAGeneratingSet,
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),
    #[error("group of order {order} too large to serialize (cap {cap})")]
    SerializationTooLarge { order: usize, cap: usize },
    #[error("invalid group JSON: {0}")]
    InvalidJson(String),
}

#[derive(Debug, Clone)]
enum GroupRepr {
    /// Full n*n multiplication table, row-major: mul[a*n+b].
    Table { mul: Vec<u32>, inv: Vec<u32> },
    /// Z_n by modular addition on indices.
    CyclicMod { n: usize },
    /// Z_p^m by digit-wise addition; index encodes base-p digits.
    VectorMod { p: usize, m: usize },
    /// Permutations of `0..degree`; products looked up by hashing.
    Perm { perms: Vec<Vec<u8>>, index: HashMap<Vec<u8>, u32> },
}

/// An explicit finite group on indices `0..order-1` with identity `0`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    repr: GroupRepr,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.repr {
            GroupRepr::Table { mul, .. } => mul[a * self.order + b] as usize,
            GroupRepr::CyclicMod { n } => (a + b) % n,
            GroupRepr::VectorMod { p, m } => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut place = 1;
                for _ in 0..*m {
                    out += ((a + b) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            }
            GroupRepr::Perm { perms, index } => {
                let f = &perms[a];
                let g = &perms[b];
                // Right action: x·(ab) = (x·a)·b.
                let h: Vec<u8> = f.iter().map(|&x| g[x as usize]).collect();
                index[&h] as usize
            }
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a < self.order);
        match &self.repr {
            GroupRepr::Table { inv, .. } => inv[a] as usize,
            GroupRepr::CyclicMod { n } => (n - a) % n,
            GroupRepr::VectorMod { p, m } => {
                let mut a = a;
                let mut out = 0;
                let mut place = 1;
                for _ in 0..*m {
                    out += ((p - a % p) % p) * place;
                    a /= p;
                    place *= p;
                }
                out
            }
            GroupRepr::Perm { perms, index } => {
                let f = &perms[a];
                let mut g = vec![0u8; f.len()];
                for (x, &fx) in f.iter().enumerate() {
                    g[fx as usize] = x as u8;
                }
                index[&g] as usize
            }
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Whether `h` (as a set of indices) is a subgroup.
    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in h {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        if !member[0] {
            return false;
        }
        for &a in h {
            if !member[self.inv(a)] {
                return false;
            }
            for &b in h {
                if !member[self.mul(a, b)] {
                    return false;
                }
            }
        }
        true
    }

    /// Serialize as `{"order", "mul_table", "gens", "labels"}`.
    pub fn to_json(&self, gens: &[usize]) -> Result<serde_json::Value, GroupError> {
        if self.order > JSON_TABLE_CAP {
            return Err(GroupError::SerializationTooLarge {
                order: self.order,
                cap: JSON_TABLE_CAP,
            });
        }
        let n = self.order;
        let mut table = Vec::with_capacity(n);
        for a in 0..n {
            table.push((0..n).map(|b| self.mul(a, b)).collect::<Vec<_>>());
        }
        Ok(json!({
            "order": n,
            "mul_table": table,
            "gens": gens,
            "labels": self.labels,
        }))
    }

    /// Parse the JSON produced by [`FiniteGroup::to_json`]; validates the
    /// group axioms and that `gens` generates.
    pub fn from_json(value: &serde_json::Value) -> Result<GeneratorSet, GroupError> {
        let err = |m: &str| GroupError::InvalidJson(m.to_string());
        let order = value["order"].as_u64().ok_or_else(|| err("missing order"))? as usize;
        let table = value["mul_table"].as_array().ok_or_else(|| err("missing mul_table"))?;
        if order == 0 || table.len() != order {
            return Err(err("mul_table has wrong number of rows"));
        }
        let mut mul = vec![0u32; order * order];
        for (a, row) in table.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| err("mul_table row not an array"))?;
            if row.len() != order {
                return Err(err("mul_table row has wrong length"));
            }
            for (b, v) in row.iter().enumerate() {
                let v = v.as_u64().ok_or_else(|| err("mul_table entry not an integer"))? as usize;
                if v >= order {
                    return Err(err("mul_table entry out of range"));
                }
                mul[a * order + b] = v as u32;
            }
        }
        let inv = invert_table(order, &mul)?;
        let labels = match &value["labels"] {
            serde_json::Value::Null => None,
            serde_json::Value::Array(ls) => Some(
                ls.iter()
                    .map(|l| l.as_str().map(str::to_string))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| err("labels must be strings"))?,
            ),
            _ => return Err(err("labels must be an array or null")),
        };
        let group = FiniteGroup { order, repr: GroupRepr::Table { mul, inv }, labels };
        verify_group_axioms(&group)?;
        let gens = value["gens"]
            .as_array()
            .ok_or_else(|| err("missing gens"))?
            .iter()
            .map(|v| v.as_u64().map(|v| v as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| err("gens must be integers"))?;
        GeneratorSet::new(Arc::new(group), gens)
    }
}

fn invert_table(order: usize, mul: &[u32]) -> Result<Vec<u32>, GroupError> {
    let mut inv = vec![u32::MAX; order];
    for a in 0..order {
        for b in 0..order {
            if mul[a * order + b] == 0 {
                inv[a] = b as u32;
            }
        }
    }
    if inv.iter().any(|&v| v == u32::MAX) {
        return Err(GroupError::AxiomViolation("some element has no inverse".into()));
    }
    Ok(inv)
}

/// Exhaustive (order <= 256) or sampled check of the group axioms.
pub fn verify_group_axioms(g: &FiniteGroup) -> Result<(), GroupError> {
    let n = g.order();
    for a in 0..n {
        if g.mul(0, a) != a || g.mul(a, 0) != a {
            return Err(GroupError::AxiomViolation(format!("identity law fails at {a}")));
        }
        if g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0 {
            return Err(GroupError::AxiomViolation(format!("inverse law fails at {a}")));
        }
    }
    let check = |a: usize, b: usize, c: usize| -> Result<(), GroupError> {
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
            return Err(GroupError::AxiomViolation(format!(
                "associativity fails at ({a},{b},{c})"
            )));
        }
        Ok(())
    };
    if n <= 256 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6772_6f75);
        for _ in 0..4096 {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}

/// A finite group paired with a validated generating set.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    group: Arc<FiniteGroup>,
    gens: Vec<usize>,
}

impl GeneratorSet {
    /// Validates that `gens` is nonempty, in range, and generates the group.
    pub fn new(group: Arc<FiniteGroup>, gens: Vec<usize>) -> Result<Self, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::EmptyGeneratorSet);
        }
        let n = group.order();
        for &g in &gens {
            if g >= n {
                return Err(GroupError::ElementOutOfRange { index: g, order: n });
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut count = 1;
        while let Some(x) = queue.pop() {
            for &a in &gens {
                let y = group.mul(x, a);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push(y);
                }
            }
        }
        if count != n {
            return Err(GroupError::NotAGeneratingSet);
        }
        Ok(GeneratorSet { group, gens })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn to_json(&self) -> Result<serde_json::Value, GroupError> {
        self.group.to_json(&self.gens)
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Z_n with the canonical generator 1 (for n = 1 the degenerate set {0}).
pub fn make_cyclic(n: usize) -> Result<GeneratorSet, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    let labels = (0..n).map(|k| k.to_string()).collect();
    let group = FiniteGroup { order: n, repr: GroupRepr::CyclicMod { n }, labels: Some(labels) };
    let gens = if n == 1 { vec![0] } else { vec![1] };
    GeneratorSet::new(Arc::new(group), gens)
}

/// Z_p^m with the m unit vectors as generators.
pub fn make_elementary_abelian(p: usize, m: usize) -> Result<GeneratorSet, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if m == 0 {
        return Err(GroupError::InvalidParameter("exponent m must be >= 1".into()));
    }
    let mut order = 1usize;
    for _ in 0..m {
        order = order
            .checked_mul(p)
            .filter(|&o| o <= ELEMENTARY_ABELIAN_CAP)
            .ok_or(GroupError::OrderCapExceeded { order: usize::MAX, cap: ELEMENTARY_ABELIAN_CAP })?;
    }
    let labels = if order <= JSON_TABLE_CAP {
        Some(
            (0..order)
                .map(|mut x| {
                    let mut digits = Vec::with_capacity(m);
                    for _ in 0..m {
                        digits.push((x % p).to_string());
                        x /= p;
                    }
                    format!("({})", digits.join(","))
                })
                .collect(),
        )
    } else {
        None
    };
    let group = FiniteGroup { order, repr: GroupRepr::VectorMod { p, m }, labels };
    let gens = (0..m).map(|i| p.pow(i as u32)).collect();
    GeneratorSet::new(Arc::new(group), gens)
}

/// Which generating set a dihedral group is built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralGens {
    /// A rotation of full order and one reflection.
    RotationReflection,
    /// Two reflections s, s' = s·r, whose product is a rotation of full order.
    TwoReflections,
}

/// D_n of order 2n (n >= 3). Index k is the rotation r^k; index n+k is the
/// reflection s·r^k.
pub fn make_dihedral(n: usize, gens_kind: DihedralGens) -> Result<GeneratorSet, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter("dihedral group needs n >= 3".into()));
    }
    let order = 2 * n;
    if order > TABLE_CAP {
        return Err(GroupError::OrderCapExceeded { order, cap: TABLE_CAP });
    }
    // (eps1, k1)·(eps2, k2): rotations act by addition; a reflection on the
    // right flips the sign of the accumulated rotation.
    let law = |a: usize, b: usize| -> usize {
        let (e1, k1) = (a / n, a % n);
        let (e2, k2) = (b / n, b % n);
        if e2 == 0 {
            e1 * n + (k1 + k2) % n
        } else {
            (1 - e1) * n + (n + k2 - k1) % n
        }
    };
    let labels = (0..order)
        .map(|a| {
            let (e, k) = (a / n, a % n);
            match (e, k) {
                (0, 0) => "e".to_string(),
                (0, k) => format!("r^{k}"),
                (1, 0) => "s".to_string(),
                (1, k) => format!("s·r^{k}"),
            }
        })
        .collect();
    let group = build_table_group(order, law, Some(labels))?;
    let gens = match gens_kind {
        DihedralGens::RotationReflection => vec![1, n],
        DihedralGens::TwoReflections => vec![n, n + 1],
    };
    if gens_kind == DihedralGens::TwoReflections {
        // The chosen pair must multiply to a rotation of full order n.
        let prod = group.mul(gens[0], gens[1]);
        if prod >= n || group.element_order(prod) != n {
            return Err(GroupError::AxiomViolation(
                "two-reflection pair does not yield a full-order rotation".into(),
            ));
        }
    }
    GeneratorSet::new(Arc::new(group), gens)
}

/// Which generating set a symmetric group is built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricGens {
    /// Adjacent transpositions (12), (23), ..., (n-1 n).
    CoxeterMoore,
    /// The transposition (12) and the full cycle (12...n).
    TranspositionCycle,
}

fn perm_label(p: &[u8]) -> String {
    // Cycle notation on 1-based points.
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn permutation_group(perms: Vec<Vec<u8>>) -> FiniteGroup {
    let order = perms.len();
    let labels = perms.iter().map(|p| perm_label(p)).collect();
    let index: HashMap<Vec<u8>, u32> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    FiniteGroup { order, repr: GroupRepr::Perm { perms, index }, labels: Some(labels) }
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn perm_is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = p[x] as usize;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// S_n as explicit permutations of n points (n <= 8).
pub fn make_symmetric(n: usize, gens_kind: SymmetricGens) -> Result<GeneratorSet, GroupError> {
    if n == 0 || n > PERMUTATION_POINTS_CAP {
        return Err(GroupError::OrderCapExceeded { order: n, cap: PERMUTATION_POINTS_CAP });
    }
    let perms = all_permutations(n);
    let group = permutation_group(perms);
    let find = |p: Vec<u8>| -> usize {
        match &group.repr {
            GroupRepr::Perm { index, .. } => index[&p] as usize,
            _ => unreachable!(),
        }
    };
    let gens = if n == 1 {
        vec![0]
    } else {
        match gens_kind {
            SymmetricGens::CoxeterMoore => (0..n - 1)
                .map(|i| {
                    let mut p: Vec<u8> = (0..n as u8).collect();
                    p.swap(i, i + 1);
                    find(p)
                })
                .collect(),
            SymmetricGens::TranspositionCycle => {
                let mut swap01: Vec<u8> = (0..n as u8).collect();
                swap01.swap(0, 1);
                let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
                if n == 2 {
                    vec![find(swap01)]
                } else {
                    vec![find(swap01), find(cycle)]
                }
            }
        }
    };
    GeneratorSet::new(Arc::new(group), gens)
}

/// A_n with the 3-cycles (1 2 i) as generators (n <= 8).
pub fn make_alternating(n: usize) -> Result<GeneratorSet, GroupError> {
    if n == 0 || n > PERMUTATION_POINTS_CAP {
        return Err(GroupError::OrderCapExceeded { order: n, cap: PERMUTATION_POINTS_CAP });
    }
    let perms: Vec<Vec<u8>> =
        all_permutations(n).into_iter().filter(|p| perm_is_even(p)).collect();
    let group = permutation_group(perms);
    let find = |p: Vec<u8>| -> usize {
        match &group.repr {
            GroupRepr::Perm { index, .. } => index[&p] as usize,
            _ => unreachable!(),
        }
    };
    let gens = if n < 3 {
        vec![0]
    } else {
        (2..n)
            .map(|i| {
                let mut p: Vec<u8> = (0..n as u8).collect();
                // The 3-cycle 0 -> 1 -> i -> 0.
                p[0] = 1;
                p[1] = i as u8;
                p[i] = 0;
                find(p)
            })
            .collect()
    };
    GeneratorSet::new(Arc::new(group), gens)
}

/// Z_p ⋊ K where K is the unique subgroup of Z_p^* of order k (k | p-1),
/// realized as the maps x -> sx + r. Generators: the translation x -> x+1
/// and, for k > 1, a generator of K.
pub fn make_affine(p: usize, k: usize) -> Result<GeneratorSet, GroupError> {
    if !is_prime(p) || p == 2 {
        return Err(GroupError::NotOddPrime(p));
    }
    if k == 0 || (p - 1) % k != 0 {
        return Err(GroupError::InvalidParameter(format!("k = {k} does not divide p-1 = {}", p - 1)));
    }
    let order = p * k;
    if order > TABLE_CAP {
        return Err(GroupError::OrderCapExceeded { order, cap: TABLE_CAP });
    }
    // K = { s : s^k = 1 mod p }, ascending; 1 comes first so (0,1) is index 0.
    let subgroup: Vec<usize> = (1..p).filter(|&s| pow_mod(s, k, p) == 1).collect();
    assert_eq!(subgroup.len(), k);
    let s_index: HashMap<usize, usize> =
        subgroup.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    // Element (r, s) at index s_index(s)*p + r; composition of x -> s1 x + r1
    // followed by x -> s2 x + r2.
    let law = |a: usize, b: usize| -> usize {
        let (r1, s1) = (a % p, subgroup[a / p]);
        let (r2, s2) = (b % p, subgroup[b / p]);
        let r = (s2 * r1 + r2) % p;
        let s = (s1 * s2) % p;
        s_index[&s] * p + r
    };
    let labels = (0..order)
        .map(|a| format!("x->{}x+{}", subgroup[a / p], a % p))
        .collect();
    let group = build_table_group(order, law, Some(labels))?;
    let translation = 1; // (r=1, s=1)
    let mut gens = vec![translation];
    if k > 1 {
        let kappa = *subgroup
            .iter()
            .find(|&&s| multiplicative_order(s, p) == k)
            .expect("K is cyclic, so it has a generator");
        gens.push(s_index[&kappa] * p);
    }
    GeneratorSet::new(Arc::new(group), gens)
}

fn pow_mod(mut base: usize, mut exp: usize, modulus: usize) -> usize {
    let mut acc = 1usize;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn multiplicative_order(s: usize, p: usize) -> usize {
    let mut x = s % p;
    let mut k = 1;
    while x != 1 {
        x = x * s % p;
        k += 1;
    }
    k
}

type Mat2 = (usize, usize, usize, usize);

fn mat2_mul(a: Mat2, b: Mat2, p: usize) -> Mat2 {
    (
        (a.0 * b.0 + a.1 * b.2) % p,
        (a.0 * b.1 + a.1 * b.3) % p,
        (a.2 * b.0 + a.3 * b.2) % p,
        (a.2 * b.1 + a.3 * b.3) % p,
    )
}

fn mat2_label(m: Mat2) -> String {
    format!("[{} {}; {} {}]", m.0, m.1, m.2, m.3)
}

fn sl2_elements(p: usize) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % (p * p)) % p == 1 % p {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

fn check_odd_prime_sl2(p: usize) -> Result<(), GroupError> {
    if !is_prime(p) || p == 2 {
        return Err(GroupError::NotOddPrime(p));
    }
    if p > SL2_PRIME_CAP {
        return Err(GroupError::OrderCapExceeded { order: p * (p * p - 1), cap: TABLE_CAP });
    }
    Ok(())
}

/// SL(2,p) for odd prime p <= 7, generated by the two unipotent matrices
/// [1 1; 0 1] and [1 0; 1 1].
pub fn make_sl2(p: usize) -> Result<GeneratorSet, GroupError> {
    check_odd_prime_sl2(p)?;
    let elements = sl2_elements(p);
    build_matrix_group(elements, (1, 1, 0, 1), (1, 0, 1, 1), |a, b| mat2_mul(a, b, p))
}

/// PSL(2,p) = SL(2,p)/{±I} for odd prime p <= 7, on the cosets of the same
/// two generators.
pub fn make_psl2(p: usize) -> Result<GeneratorSet, GroupError> {
    check_odd_prime_sl2(p)?;
    let canon = move |m: Mat2| -> Mat2 {
        let neg = (p - m.0, p - m.1, p - m.2, p - m.3);
        let neg = (neg.0 % p, neg.1 % p, neg.2 % p, neg.3 % p);
        m.min(neg)
    };
    let mut elements: Vec<Mat2> = sl2_elements(p).into_iter().map(canon).collect();
    elements.sort();
    elements.dedup();
    build_matrix_group(
        elements,
        canon((1, 1, 0, 1)),
        canon((1, 0, 1, 1)),
        move |a, b| canon(mat2_mul(a, b, p)),
    )
}

fn build_matrix_group(
    mut elements: Vec<Mat2>,
    gen_x: Mat2,
    gen_y: Mat2,
    law: impl Fn(Mat2, Mat2) -> Mat2,
) -> Result<GeneratorSet, GroupError> {
    elements.sort();
    let identity = (1, 0, 0, 1);
    let pos = elements.iter().position(|&m| m == identity).expect("identity present");
    elements.swap(0, pos);
    let order = elements.len();
    if order > TABLE_CAP {
        return Err(GroupError::OrderCapExceeded { order, cap: TABLE_CAP });
    }
    let index: HashMap<Mat2, usize> =
        elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let labels = elements.iter().map(|&m| mat2_label(m)).collect();
    let group =
        build_table_group(order, |a, b| index[&law(elements[a], elements[b])], Some(labels))?;
    let gens = vec![index[&gen_x], index[&gen_y]];
    GeneratorSet::new(Arc::new(group), gens)
}

fn build_table_group(
    order: usize,
    law: impl Fn(usize, usize) -> usize,
    labels: Option<Vec<String>>,
) -> Result<FiniteGroup, GroupError> {
    let mut mul = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            mul[a * order + b] = law(a, b) as u32;
        }
    }
    let inv = invert_table(order, &mul)?;
    Ok(FiniteGroup { order, repr: GroupRepr::Table { mul, inv }, labels })
}

/// The group families studied here, with the parameters that pin down both
/// the group and its canonical generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic { n: usize },
    ElementaryAbelian { p: usize, m: usize },
    Dihedral { n: usize, gens: DihedralGens },
    DihedralPrimeSquared { p: usize, gens: DihedralGens },
    Affine { p: usize, k: usize },
    Symmetric { n: usize, gens: SymmetricGens },
    Alternating { n: usize },
    SpecialLinear { p: usize },
    ProjectiveSpecialLinear { p: usize },
}

impl Family {
    pub fn build(&self) -> Result<GeneratorSet, GroupError> {
        match *self {
            Family::Cyclic { n } => make_cyclic(n),
            Family::ElementaryAbelian { p, m } => make_elementary_abelian(p, m),
            Family::Dihedral { n, gens } => make_dihedral(n, gens),
            Family::DihedralPrimeSquared { p, gens } => {
                if !is_prime(p) || p == 2 {
                    return Err(GroupError::NotOddPrime(p));
                }
                make_dihedral(p * p, gens)
            }
            Family::Affine { p, k } => make_affine(p, k),
            Family::Symmetric { n, gens } => make_symmetric(n, gens),
            Family::Alternating { n } => make_alternating(n),
            Family::SpecialLinear { p } => make_sl2(p),
            Family::ProjectiveSpecialLinear { p } => make_psl2(p),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Family::Cyclic { n } => format!("Z_{n}"),
            Family::ElementaryAbelian { p, m } => format!("Z_{p}^{m}"),
            Family::Dihedral { n, .. } => format!("D_{n}"),
            Family::DihedralPrimeSquared { p, .. } => format!("D_{{{p}^2}}"),
            Family::Affine { p, k } => format!("Z_{p}:K_{k}"),
            Family::Symmetric { n, .. } => format!("S_{n}"),
            Family::Alternating { n } => format!("A_{n}"),
            Family::SpecialLinear { p } => format!("SL(2,{p})"),
            Family::ProjectiveSpecialLinear { p } => format!("PSL(2,{p})"),
        }
    }
}
