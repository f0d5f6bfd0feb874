//! Exact arithmetic and canonical keys for the supported groups.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::One;
use rustc_hash::FxHashMap;
use serde_json::Value;

use crate::error::{invalid, Error, Result};

/// Element of the discrete Heisenberg group written `z^r g^a h^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HeisTriple {
    pub r: i64,
    pub a: i64,
    pub b: i64,
}

impl HeisTriple {
    pub const IDENTITY: HeisTriple = HeisTriple { r: 0, a: 0, b: 0 };
    pub const G: HeisTriple = HeisTriple { r: 0, a: 1, b: 0 };
    pub const H: HeisTriple = HeisTriple { r: 0, a: 0, b: 1 };
    pub const Z: HeisTriple = HeisTriple { r: 1, a: 0, b: 0 };

    pub const fn new(r: i64, a: i64, b: i64) -> Self {
        HeisTriple { r, a, b }
    }

    pub fn checked_mul(&self, y: &HeisTriple) -> Option<HeisTriple> {
        let cross = y.a.checked_mul(self.b)?;
        Some(HeisTriple {
            r: self.r.checked_add(y.r)?.checked_add(cross)?,
            a: self.a.checked_add(y.a)?,
            b: self.b.checked_add(y.b)?,
        })
    }

    pub fn checked_inv(&self) -> Option<HeisTriple> {
        Some(HeisTriple {
            r: self.a.checked_mul(self.b)?.checked_sub(self.r)?,
            a: self.a.checked_neg()?,
            b: self.b.checked_neg()?,
        })
    }

    /// Group product; overflow is a hard error.
    pub fn mul(&self, y: &HeisTriple) -> HeisTriple {
        self.checked_mul(y).expect("Heisenberg exponent overflow")
    }

    pub fn inv(&self) -> HeisTriple {
        self.checked_inv().expect("Heisenberg exponent overflow")
    }

    pub fn pow(&self, n: i64) -> HeisTriple {
        let base = if n < 0 { self.inv() } else { *self };
        let mut acc = HeisTriple::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `|a| + |b|`.
    pub fn degree(&self) -> i64 {
        self.a.abs() + self.b.abs()
    }

    pub fn is_first_quadrant(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.r >= 0 && self.r <= self.a * self.b
    }
}

impl std::ops::Mul for HeisTriple {
    type Output = HeisTriple;
    fn mul(self, rhs: HeisTriple) -> HeisTriple {
        HeisTriple::mul(&self, &rhs)
    }
}

impl fmt::Display for HeisTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.r, self.a, self.b)
    }
}

/// One of the eight dihedral symmetries: a sign change `(e1, e2)` followed by
/// an optional swap of the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct D4Symmetry {
    pub sign_g: i8,
    pub sign_h: i8,
    pub swap: bool,
}

impl D4Symmetry {
    pub const IDENTITY: D4Symmetry = D4Symmetry { sign_g: 1, sign_h: 1, swap: false };
    pub const SWAP: D4Symmetry = D4Symmetry { sign_g: 1, sign_h: 1, swap: true };

    pub fn new(sign_g: i8, sign_h: i8, swap: bool) -> Result<Self> {
        if sign_g.abs() != 1 || sign_h.abs() != 1 {
            return invalid("signs must be +1 or -1");
        }
        Ok(D4Symmetry { sign_g, sign_h, swap })
    }

    pub fn signs(sign_g: i8, sign_h: i8) -> Self {
        D4Symmetry { sign_g: sign_g.signum(), sign_h: sign_h.signum(), swap: false }
    }

    pub fn all() -> Vec<D4Symmetry> {
        let mut out = Vec::with_capacity(8);
        for swap in [false, true] {
            for sign_g in [1, -1] {
                for sign_h in [1, -1] {
                    out.push(D4Symmetry { sign_g, sign_h, swap });
                }
            }
        }
        out
    }

    pub fn apply(&self, t: &HeisTriple) -> HeisTriple {
        let e1 = self.sign_g as i64;
        let e2 = self.sign_h as i64;
        let signed = HeisTriple::new(e1 * e2 * t.r, e1 * t.a, e2 * t.b);
        if self.swap {
            HeisTriple::new(signed.a * signed.b - signed.r, signed.b, signed.a)
        } else {
            signed
        }
    }

    /// Linear part on `(a, b)` as a signed permutation matrix.
    fn matrix(&self) -> [[i64; 2]; 2] {
        let e1 = self.sign_g as i64;
        let e2 = self.sign_h as i64;
        if self.swap {
            [[0, e2], [e1, 0]]
        } else {
            [[e1, 0], [0, e2]]
        }
    }

    fn from_matrix(m: [[i64; 2]; 2]) -> Self {
        if m[0][1] == 0 {
            D4Symmetry { sign_g: m[0][0] as i8, sign_h: m[1][1] as i8, swap: false }
        } else {
            D4Symmetry { sign_g: m[1][0] as i8, sign_h: m[0][1] as i8, swap: true }
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &D4Symmetry) -> D4Symmetry {
        let p = self.matrix();
        let q = other.matrix();
        let mut m = [[0i64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = p[i][0] * q[0][j] + p[i][1] * q[1][j];
            }
        }
        D4Symmetry::from_matrix(m)
    }
}

/// Generator letters of the free group on `g, h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    G,
    GInv,
    H,
    HInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::G => Letter::GInv,
            Letter::GInv => Letter::G,
            Letter::H => Letter::HInv,
            Letter::HInv => Letter::H,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::G => 'g',
            Letter::GInv => 'G',
            Letter::H => 'h',
            Letter::HInv => 'H',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'g' => Some(Letter::G),
            'G' => Some(Letter::GInv),
            'h' => Some(Letter::H),
            'H' => Some(Letter::HInv),
            _ => None,
        }
    }
}

/// Freely reduced word over `g, g⁻¹, h, h⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn parse(s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return invalid(format!("unknown letter {c:?} in word {s:?}")),
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// `g^a` for any integer `a`.
    pub fn power(letter: Letter, n: i64) -> Word {
        let l = if n < 0 { letter.inverse() } else { letter };
        Word(vec![l; n.unsigned_abs() as usize])
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inv(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Total exponent sum with `g, h ↦ 1`.
    pub fn degree(&self) -> i64 {
        self.0
            .iter()
            .map(|l| match l {
                Letter::G | Letter::H => 1,
                Letter::GInv | Letter::HInv => -1,
            })
            .sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Multiplication table of a finite group on indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return invalid("empty group table");
        }
        for row in &table {
            if row.len() != n {
                return invalid("group table is not square");
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return invalid("group table row is not a permutation");
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return invalid("group table column is not a permutation");
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidArgument("group table has no identity".into()))?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return invalid("group table is not associative");
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == identity).unwrap())
            .collect();
        Ok(FiniteGroupTable { table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("cyclic group of order 0");
        }
        FiniteGroupTable::new((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
    }

    /// Symmetric group on `degree` points, indexed in the order returned by
    /// [`FiniteGroupTable::permutation_list`].
    pub fn symmetric(degree: usize) -> Result<Self> {
        let perms = Self::permutation_list(degree);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&(0..degree).map(|i| p[q[i]]).collect()))
                    .collect()
            })
            .collect();
        FiniteGroupTable::new(table)
    }

    /// All permutations of `0..degree` in lexicographic order; product `p·q`
    /// is `i ↦ p[q[i]]`.
    pub fn permutation_list(degree: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; degree], &mut out);
        out
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// Runtime description of one of the supported groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    FreeAbelian(usize),
    Heisenberg,
    FreeGroup2,
    ZTimesFinite(FiniteGroupTable),
}

/// Element in canonical form for one of the supported groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Lattice(Vec<i64>),
    Heis(HeisTriple),
    Word(Word),
    ZFinite(i64, usize),
}

impl GroupDescriptor {
    pub fn new_free_abelian(d: usize) -> Result<Self> {
        if d == 0 {
            return invalid("free abelian dimension must be at least 1");
        }
        Ok(GroupDescriptor::FreeAbelian(d))
    }

    pub fn validate(&self, x: &GroupElement) -> Result<()> {
        match (self, x) {
            (GroupDescriptor::FreeAbelian(d), GroupElement::Lattice(v)) if v.len() == *d => Ok(()),
            (GroupDescriptor::Heisenberg, GroupElement::Heis(_)) => Ok(()),
            (GroupDescriptor::FreeGroup2, GroupElement::Word(w)) if w.is_reduced() => Ok(()),
            (GroupDescriptor::ZTimesFinite(t), GroupElement::ZFinite(_, i)) if *i < t.order() => Ok(()),
            _ => invalid(format!("element {x:?} does not belong to {}", self.name())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupDescriptor::FreeAbelian(d) => format!("Z^{d}"),
            GroupDescriptor::Heisenberg => "heisenberg".into(),
            GroupDescriptor::FreeGroup2 => "free2".into(),
            GroupDescriptor::ZTimesFinite(t) => format!("Z x finite({})", t.order()),
        }
    }

    /// Decode an element from its JSON text encoding.
    pub fn parse_element(&self, v: &Value) -> Result<GroupElement> {
        let ints = |v: &Value| -> Result<Vec<i64>> {
            v.as_array()
                .ok_or_else(|| Error::InvalidArgument(format!("expected integer array, got {v}")))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidArgument(format!("expected integer, got {x}")))
                })
                .collect()
        };
        let el = match self {
            GroupDescriptor::FreeAbelian(_) => GroupElement::Lattice(ints(v)?),
            GroupDescriptor::Heisenberg => match ints(v)?.as_slice() {
                [r, a, b] => GroupElement::Heis(HeisTriple::new(*r, *a, *b)),
                _ => return invalid("Heisenberg elements are [r,a,b]"),
            },
            GroupDescriptor::FreeGroup2 => match v.as_str() {
                Some(s) => GroupElement::Word(Word::parse(s)?),
                None => return invalid("words are strings over g,G,h,H"),
            },
            GroupDescriptor::ZTimesFinite(_) => match ints(v)?.as_slice() {
                [n, i] if *i >= 0 => GroupElement::ZFinite(*n, *i as usize),
                _ => return invalid("Z x finite elements are [n,index]"),
            },
        };
        self.validate(&el)?;
        Ok(el)
    }
}

impl GroupElement {
    pub fn to_json(&self) -> Value {
        match self {
            GroupElement::Lattice(v) => Value::from(v.clone()),
            GroupElement::Heis(t) => Value::from(vec![t.r, t.a, t.b]),
            GroupElement::Word(w) => Value::from(w.to_string()),
            GroupElement::ZFinite(n, i) => Value::from(vec![*n, *i as i64]),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

pub fn identity(desc: &GroupDescriptor) -> GroupElement {
    match desc {
        GroupDescriptor::FreeAbelian(d) => GroupElement::Lattice(vec![0; *d]),
        GroupDescriptor::Heisenberg => GroupElement::Heis(HeisTriple::IDENTITY),
        GroupDescriptor::FreeGroup2 => GroupElement::Word(Word::identity()),
        GroupDescriptor::ZTimesFinite(t) => GroupElement::ZFinite(0, t.identity()),
    }
}

pub fn mul(desc: &GroupDescriptor, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    desc.validate(x)?;
    desc.validate(y)?;
    Ok(match (desc, x, y) {
        (_, GroupElement::Lattice(u), GroupElement::Lattice(v)) => GroupElement::Lattice(
            u.iter()
                .zip(v)
                .map(|(p, q)| p.checked_add(*q).ok_or(Error::Overflow("lattice sum")))
                .collect::<Result<_>>()?,
        ),
        (_, GroupElement::Heis(s), GroupElement::Heis(t)) => {
            GroupElement::Heis(s.checked_mul(t).ok_or(Error::Overflow("Heisenberg product"))?)
        }
        (_, GroupElement::Word(u), GroupElement::Word(v)) => GroupElement::Word(u.mul(v)),
        (GroupDescriptor::ZTimesFinite(tab), GroupElement::ZFinite(m, i), GroupElement::ZFinite(n, j)) => {
            GroupElement::ZFinite(m.checked_add(*n).ok_or(Error::Overflow("integer part"))?, tab.mul(*i, *j))
        }
        _ => return invalid("variant mismatch"),
    })
}

pub fn inv(desc: &GroupDescriptor, x: &GroupElement) -> Result<GroupElement> {
    desc.validate(x)?;
    Ok(match (desc, x) {
        (_, GroupElement::Lattice(v)) => GroupElement::Lattice(v.iter().map(|c| -c).collect()),
        (_, GroupElement::Heis(t)) => {
            GroupElement::Heis(t.checked_inv().ok_or(Error::Overflow("Heisenberg inverse"))?)
        }
        (_, GroupElement::Word(w)) => GroupElement::Word(w.inv()),
        (GroupDescriptor::ZTimesFinite(tab), GroupElement::ZFinite(n, i)) => GroupElement::ZFinite(-n, tab.inv(*i)),
        _ => return invalid("variant mismatch"),
    })
}

/// Injective byte encoding usable as a set key.
pub fn canonical_key(x: &GroupElement) -> Vec<u8> {
    let mut out = Vec::new();
    match x {
        GroupElement::Lattice(v) => {
            out.push(1);
            out.extend_from_slice(&(v.len() as u32).to_be_bytes());
            for c in v {
                out.extend_from_slice(&c.to_be_bytes());
            }
        }
        GroupElement::Heis(t) => {
            out.push(2);
            for c in [t.r, t.a, t.b] {
                out.extend_from_slice(&c.to_be_bytes());
            }
        }
        GroupElement::Word(w) => {
            out.push(3);
            out.extend(w.to_string().bytes());
        }
        GroupElement::ZFinite(n, i) => {
            out.push(4);
            out.extend_from_slice(&n.to_be_bytes());
            out.extend_from_slice(&(*i as u64).to_be_bytes());
        }
    }
    out
}

/// Static group interface used by the enumeration code.
pub trait Group: Sync {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Heisenberg;

impl Group for Heisenberg {
    type Elem = HeisTriple;
    fn identity(&self) -> HeisTriple {
        HeisTriple::IDENTITY
    }
    fn mul(&self, x: &HeisTriple, y: &HeisTriple) -> HeisTriple {
        x.mul(y)
    }
    fn inv(&self, x: &HeisTriple) -> HeisTriple {
        x.inv()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FreeAbelian {
    pub dim: usize,
}

impl Group for FreeAbelian {
    type Elem = Vec<i64>;
    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }
    fn mul(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter()
            .zip(y)
            .map(|(p, q)| p.checked_add(*q).expect("lattice overflow"))
            .collect()
    }
    fn inv(&self, x: &Vec<i64>) -> Vec<i64> {
        x.iter().map(|c| -c).collect()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroup2;

impl Group for FreeGroup2 {
    type Elem = Word;
    fn identity(&self) -> Word {
        Word::identity()
    }
    fn mul(&self, x: &Word, y: &Word) -> Word {
        x.mul(y)
    }
    fn inv(&self, x: &Word) -> Word {
        x.inv()
    }
}

#[derive(Clone, Debug)]
pub struct ZTimesFinite {
    pub table: FiniteGroupTable,
}

impl Group for ZTimesFinite {
    type Elem = (i64, usize);
    fn identity(&self) -> (i64, usize) {
        (0, self.table.identity())
    }
    fn mul(&self, x: &(i64, usize), y: &(i64, usize)) -> (i64, usize) {
        (x.0.checked_add(y.0).expect("integer overflow"), self.table.mul(x.1, y.1))
    }
    fn inv(&self, x: &(i64, usize)) -> (i64, usize) {
        (-x.0, self.table.inv(x.1))
    }
}

impl Group for GroupDescriptor {
    type Elem = GroupElement;
    fn identity(&self) -> GroupElement {
        identity(self)
    }
    fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        mul(self, x, y).expect("elements validated on entry")
    }
    fn inv(&self, x: &GroupElement) -> GroupElement {
        inv(self, x).expect("elements validated on entry")
    }
}

/// Successive powers `f^0, f^1, …, f^k` of a group-ring element with positive
/// integer coefficients, each product formed as `f · f^{j}` (left multiplication).
pub fn group_ring_powers<G: Group>(
    group: &G,
    f: &[(G::Elem, BigUint)],
    k: usize,
) -> Vec<FxHashMap<G::Elem, BigUint>> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = FxHashMap::default();
    cur.insert(group.identity(), BigUint::one());
    out.push(cur);
    for _ in 0..k {
        let prev = out.last().unwrap();
        let mut next: FxHashMap<G::Elem, BigUint> = FxHashMap::default();
        for (w, c) in prev {
            for (s, cs) in f {
                *next.entry(group.mul(s, w)).or_default() += c * cs;
            }
        }
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_commutator() {
        assert_eq!(HeisTriple::H * HeisTriple::G, HeisTriple::new(1, 1, 1));
        assert_eq!(HeisTriple::new(3, -2, 5).inv(), HeisTriple::new(-13, 2, -5));
        let t = HeisTriple::new(4, 2, -3);
        assert_eq!(t * t.inv(), HeisTriple::IDENTITY);
    }

    #[test]
    fn d4_examples() {
        assert_eq!(D4Symmetry::SWAP.apply(&HeisTriple::new(1, 2, 3)), HeisTriple::new(5, 3, 2));
        let t = HeisTriple::new(7, 2, -4);
        assert_eq!(D4Symmetry::signs(-1, -1).apply(&t), HeisTriple::new(7, -2, 4));
        assert_eq!(D4Symmetry::SWAP.apply(&D4Symmetry::SWAP.apply(&t)), t);
    }

    #[test]
    fn d4_composition_matches_application() {
        let t = HeisTriple::new(-3, 5, 2);
        for s in D4Symmetry::all() {
            for u in D4Symmetry::all() {
                assert_eq!(s.compose(&u).apply(&t), s.apply(&u.apply(&t)));
            }
        }
    }

    #[test]
    fn free_word_cancellation() {
        let x = Word::parse("gH").unwrap();
        let y = Word::parse("hg").unwrap();
        assert_eq!(x.mul(&y).to_string(), "gg");
        assert_eq!(Word::parse("gh").unwrap().inv().to_string(), "HG");
        assert_eq!(Word::parse("gGhH").unwrap(), Word::identity());
    }

    #[test]
    fn descriptor_identity_and_mismatch() {
        let d = GroupDescriptor::FreeAbelian(2);
        assert_eq!(identity(&d), GroupElement::Lattice(vec![0, 0]));
        assert!(mul(&d, &GroupElement::Heis(HeisTriple::G), &identity(&d)).is_err());
        assert_eq!(identity(&GroupDescriptor::FreeGroup2), GroupElement::Word(Word::identity()));
    }

    #[test]
    fn keys_are_injective_on_examples() {
        let hg = HeisTriple::H * HeisTriple::G;
        let zgh = HeisTriple::Z * HeisTriple::G * HeisTriple::H;
        assert_eq!(canonical_key(&GroupElement::Heis(hg)), canonical_key(&GroupElement::Heis(zgh)));
        assert_ne!(
            canonical_key(&GroupElement::Heis(HeisTriple::new(1, 1, 1))),
            canonical_key(&GroupElement::Heis(HeisTriple::new(0, 1, 1)))
        );
    }

    #[test]
    fn finite_tables() {
        let s3 = FiniteGroupTable::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![0, 1]]).is_err());
        let c4 = FiniteGroupTable::cyclic(4).unwrap();
        assert_eq!(c4.inv(1), 3);
    }
}
