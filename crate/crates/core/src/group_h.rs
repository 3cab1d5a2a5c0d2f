//! The group `H = Z2^7 / <a1 a2 ... a7>`, its subgroups and the
//! automorphisms that permute the generators `a1, ..., a7`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

const FULL: u8 = 0b111_1111;

/// An element of `H`, stored as the canonical 7-bit mask
/// `min(mask, mask ^ 0b1111111)`. Bit `j - 1` stands for `a_j`.
///
/// Since the complement flips bit 6, the canonical mask never has bit 6
/// set and doubles as an index in `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(u8);

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem(0);

    pub fn from_mask(mask: u8) -> Self {
        let m = mask & FULL;
        GroupElem(m.min(m ^ FULL))
    }

    /// The generator `a_j`, `1 <= j <= 7`.
    pub fn generator(j: usize) -> Self {
        assert!((1..=7).contains(&j), "generator index out of range: {j}");
        Self::from_mask(1 << (j - 1))
    }

    /// The product `a_{i1} a_{i2} ...` of the listed generators.
    pub fn word(indices: &[usize]) -> Self {
        indices.iter().fold(Self::IDENTITY, |acc, &j| acc * Self::generator(j))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 64);
        GroupElem(i as u8)
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// The `j` with `self = a_j`, if any.
    pub fn generator_index(self) -> Option<usize> {
        (1..=7).find(|&j| Self::generator(j) == self)
    }

    /// Generator indices of the shorter of the two representatives.
    pub fn support(self) -> Vec<usize> {
        let m = if (self.0 ^ FULL).count_ones() < self.0.count_ones() { self.0 ^ FULL } else { self.0 };
        (1..=7).filter(|j| m >> (j - 1) & 1 == 1).collect()
    }

    pub fn all() -> impl Iterator<Item = GroupElem> {
        (0..64u8).map(GroupElem)
    }
}

impl std::ops::Mul for GroupElem {
    type Output = GroupElem;
    fn mul(self, o: GroupElem) -> GroupElem {
        GroupElem::from_mask(self.0 ^ o.0)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for j in self.support() {
            write!(f, "a{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A subgroup of `H`, as a 64-bit membership bitmap over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(u64);

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup(1)
    }

    pub fn whole() -> Self {
        Subgroup(u64::MAX)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, g: GroupElem) -> bool {
        self.0 >> g.index() & 1 == 1
    }

    pub fn order(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn elements(self) -> Vec<GroupElem> {
        GroupElem::all().filter(|&g| self.contains(g)).collect()
    }

    /// The set `{g s : s in self}` as a bitmap.
    fn translate(self, g: GroupElem) -> u64 {
        self.elements().iter().fold(0, |acc, &s| acc | 1 << (g * s).index())
    }

    /// `<self, g>`; for an elementary abelian 2-group this is `S u gS`.
    pub fn adjoin(self, g: GroupElem) -> Self {
        if self.contains(g) {
            self
        } else {
            Subgroup(self.0 | self.translate(g))
        }
    }

    pub fn is_subgroup_of(self, o: Subgroup) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_closed(self) -> bool {
        let els = self.elements();
        self.contains(GroupElem::IDENTITY) && els.iter().all(|&a| els.iter().all(|&b| self.contains(a * b)))
    }

    pub fn image(self, aut: &GenAut) -> Self {
        Subgroup(self.elements().iter().fold(0, |acc, &g| acc | 1 << aut.apply(g).index()))
    }

    pub fn is_invariant(self, aut: &GenAut) -> bool {
        self.image(aut) == self
    }

    /// Product set `J1 J2`, itself a subgroup since `H` is abelian.
    pub fn product(self, o: Subgroup) -> Self {
        o.elements().iter().fold(self, |acc, &g| acc.adjoin(g))
    }

    /// Canonical masks of the elements, sorted.
    pub fn masks(self) -> Vec<u8> {
        self.elements().iter().map(|g| g.mask()).collect()
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements())
    }
}

/// Smallest subgroup containing `gens`.
pub fn generate(gens: &[GroupElem]) -> Subgroup {
    gens.iter().fold(Subgroup::trivial(), |acc, &g| acc.adjoin(g))
}

/// `K = <a1a3a7, a2a3a5, a1a2a4>`.
pub fn k_subgroup() -> Subgroup {
    generate(&[GroupElem::word(&[1, 3, 7]), GroupElem::word(&[2, 3, 5]), GroupElem::word(&[1, 2, 4])])
}

/// `K* = <a1a2a6, a2a3a7, a1a3a4>`.
pub fn kstar_subgroup() -> Subgroup {
    generate(&[GroupElem::word(&[1, 2, 6]), GroupElem::word(&[2, 3, 7]), GroupElem::word(&[1, 3, 4])])
}

/// Every subgroup of `H` exactly once, sorted by order and then bitmap.
///
/// Breadth-first: each subgroup found is extended by every element
/// outside it.
pub fn all_subgroups() -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Subgroup::trivial());
    queue.push_back(Subgroup::trivial());
    while let Some(s) = queue.pop_front() {
        for g in GroupElem::all() {
            let t = s.adjoin(g);
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.order(), s.0));
    out
}

/// An automorphism of `H` permuting the generators: `a_j -> a_{perm[j-1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenAut {
    perm: [usize; 7],
}

impl GenAut {
    /// `images[j - 1]` is the index of the image of `a_j`.
    pub fn new(images: [usize; 7]) -> Result<Self> {
        let set: BTreeSet<_> = images.iter().copied().collect();
        if set.len() != 7 || !set.iter().all(|j| (1..=7).contains(j)) {
            return Err(Error::Precondition(format!("not a permutation of 1..7: {images:?}")));
        }
        Ok(Self { perm: images })
    }

    pub fn identity() -> Self {
        Self { perm: [1, 2, 3, 4, 5, 6, 7] }
    }

    /// `a_j -> a_{j+1}`, `a_7 -> a_1`.
    pub fn lambda() -> Self {
        Self { perm: [2, 3, 4, 5, 6, 7, 1] }
    }

    /// `(1 2)(3 7)(4 6)`.
    pub fn zeta() -> Self {
        Self { perm: [2, 1, 7, 6, 5, 4, 3] }
    }

    pub fn images(&self) -> [usize; 7] {
        self.perm
    }

    pub fn image_of(&self, j: usize) -> usize {
        self.perm[j - 1]
    }

    pub fn apply(&self, g: GroupElem) -> GroupElem {
        let m = g.mask();
        let mut out = 0u8;
        for j in 0..7 {
            if m >> j & 1 == 1 {
                out |= 1 << (self.perm[j] - 1);
            }
        }
        GroupElem::from_mask(out)
    }

    /// `self o other`.
    pub fn compose(&self, o: &GenAut) -> GenAut {
        let mut perm = [0; 7];
        for j in 0..7 {
            perm[j] = self.perm[o.perm[j] - 1];
        }
        GenAut { perm }
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut n = 1;
        while acc != GenAut::identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }
}

/// Generator permutation induced by conjugating with a scaled coordinate
/// permutation.
///
/// The linear map sends `x` to `y` with `y_i = s_i x_{source[i-1]}`. The
/// sign flip `a_j` of coordinate `j` conjugates to the flip of the new
/// coordinate reading old coordinate `j`; the scalars cancel.
pub fn conjugation_action(source: [usize; 7]) -> Result<GenAut> {
    let check = GenAut::new(source)?;
    let mut perm = [0; 7];
    for (i, &src) in check.perm.iter().enumerate() {
        perm[src - 1] = i + 1;
    }
    GenAut::new(perm)
}

/// Subgroups setwise fixed by `aut`.
pub fn invariant_subgroups(aut: &GenAut) -> Vec<Subgroup> {
    all_subgroups().into_iter().filter(|s| s.is_invariant(aut)).collect()
}

/// True iff `j` contains none of `a1, ..., a7`.
pub fn acts_freely(j: Subgroup) -> bool {
    (1..=7).all(|k| !j.contains(GroupElem::generator(k)))
}

/// Expresses each `a_j` in `H / k` as a word in the images of `a1, a2, a3`.
///
/// Entry `j - 1` is a 3-bit mask over `(a1*, a2*, a3*)`.
pub fn quotient_relations(k: Subgroup) -> Result<[u8; 7]> {
    if k.order() != 8 || !acts_freely(k) {
        return Err(Error::Precondition("expected a free subgroup of order 8".into()));
    }
    let g = |j| GroupElem::generator(j);
    if generate(&[g(1), g(2), g(3)]).product(k) != Subgroup::whole() {
        return Err(Error::Precondition("a1*, a2*, a3* do not generate H/K".into()));
    }
    let word_elem = |w: u8| (0..3).filter(|b| w >> b & 1 == 1).fold(GroupElem::IDENTITY, |acc, b| acc * g(b + 1));
    let mut out = [0u8; 7];
    for j in 1..=7 {
        // Exactly one word lands in the coset of a_j, since [H : k] = 8.
        out[j - 1] = (0..8u8).find(|&w| k.contains(g(j) * word_elem(w))).expect("cosets cover H");
    }
    Ok(out)
}

/// Renders a quotient word such as `a1*a3*`.
pub fn format_word(w: u8, letter: &str) -> String {
    (0..3).filter(|b| w >> b & 1 == 1).map(|b| format!("{letter}{}", b + 1)).collect()
}

/// A line of the Fano plane on `{1..7}`, sorted.
pub type FanoLine = [usize; 3];

/// The seven order-4 subgroups of `H / k`, as index triples `{i, j, r}`
/// with `a_i* a_j* = a_r*`, sorted.
///
/// Order-4 subgroups of the quotient are the order-32 subgroups of `H`
/// containing `k`; they are found by enumeration.
pub fn fano_lines(k: Subgroup) -> Result<Vec<FanoLine>> {
    quotient_relations(k)?;
    let mut lines = Vec::new();
    for s in all_subgroups() {
        if s.order() != 32 || !k.is_subgroup_of(s) {
            continue;
        }
        let idx: Vec<usize> = (1..=7).filter(|&j| s.contains(GroupElem::generator(j))).collect();
        let line: FanoLine = idx.try_into().map_err(|v: Vec<usize>| {
            Error::Precondition(format!("order-4 subgroup meets {} generators", v.len()))
        })?;
        lines.push(line);
    }
    lines.sort();
    Ok(lines)
}

/// Preimage in `H` of the subgroup of `H / k` generated by the images of
/// the listed generators.
pub fn preimage(k: Subgroup, gens: &[usize]) -> Subgroup {
    gens.iter().fold(k, |acc, &j| acc.adjoin(GroupElem::generator(j)))
}

/// Gaussian binomial `[n choose k]_2`.
pub fn gaussian_binomial_2(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= (1 << (n - i)) - 1;
        den *= (1 << (i + 1)) - 1;
    }
    num / den
}

/// One case of the invariant-subgroup argument: the `lambda`-closure of a
/// single element and the subgroup it must equal.
#[derive(Clone, Debug)]
pub struct LemmaCase {
    pub element: GroupElem,
    pub expected: &'static str,
    pub closure: Subgroup,
    pub ok: bool,
}

/// Replays the case analysis: the `lambda`-closure of each element must be
/// `H`, `K` or `K*` as listed.
pub fn lemma_cases() -> Vec<LemmaCase> {
    let table: [(&[usize], &str); 10] = [
        (&[1], "H"),
        (&[1, 2], "H"),
        (&[1, 3], "H"),
        (&[1, 4], "H"),
        (&[1, 2, 3], "H"),
        (&[1, 2, 5], "H"),
        (&[1, 3, 5], "H"),
        (&[1, 2, 4], "K"),
        (&[1, 2, 6], "K*"),
        (&[1, 3, 4], "K*"),
    ];
    let lam = GenAut::lambda();
    table
        .iter()
        .map(|(w, expected)| {
            let element = GroupElem::word(w);
            let closure = generate(&orbit(element, &lam));
            let target = match *expected {
                "H" => Subgroup::whole(),
                "K" => k_subgroup(),
                _ => kstar_subgroup(),
            };
            LemmaCase { element, expected, closure, ok: closure == target }
        })
        .collect()
}

/// Orbit of `g` under the cyclic group generated by `aut`.
pub fn orbit(g: GroupElem, aut: &GenAut) -> Vec<GroupElem> {
    let mut out = vec![g];
    let mut cur = aut.apply(g);
    while cur != g {
        out.push(cur);
        cur = aut.apply(cur);
    }
    out
}

/// The `aut`-orbits on the non-identity elements, each given by its
/// smallest member.
pub fn orbit_representatives(aut: &GenAut) -> Vec<GroupElem> {
    let mut seen = 0u64;
    let mut reps = Vec::new();
    for g in GroupElem::all().skip(1) {
        if seen >> g.index() & 1 == 0 {
            reps.push(g);
            for h in orbit(g, aut) {
                seen |= 1 << h.index();
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(GroupElem::word(&[1, 2, 3, 4, 5, 6, 7]), GroupElem::IDENTITY);
        assert_eq!(GroupElem::generator(7), GroupElem::word(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(GroupElem::generator(7).to_string(), "a7");
        assert_eq!(GroupElem::word(&[1, 3, 7]).to_string(), "a1a3a7");
        for a in 0..128u8 {
            for b in 0..128u8 {
                let p = GroupElem::from_mask(a) * GroupElem::from_mask(b);
                assert_eq!(p, GroupElem::from_mask(a ^ b));
                assert_eq!(p, GroupElem::from_mask(a ^ FULL) * GroupElem::from_mask(b));
            }
        }
    }

    #[test]
    fn generate_examples() {
        assert_eq!(generate(&[]), Subgroup::trivial());
        assert_eq!(k_subgroup().order(), 8);
        let gens: Vec<_> = (1..=6).map(GroupElem::generator).collect();
        assert_eq!(generate(&gens), Subgroup::whole());
    }

    #[test]
    fn k_contains_the_seven_triples() {
        let k = k_subgroup();
        for t in [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [1, 5, 6], [2, 6, 7], [1, 3, 7]] {
            assert!(k.contains(GroupElem::word(&t)));
        }
        let ks = kstar_subgroup();
        for t in [[1, 2, 6], [2, 3, 7], [1, 3, 4], [2, 4, 5], [3, 5, 6], [4, 6, 7], [1, 5, 7]] {
            assert!(ks.contains(GroupElem::word(&t)));
        }
    }

    #[test]
    fn zeta_and_lambda() {
        assert_eq!(GenAut::lambda().order(), 7);
        assert_eq!(GenAut::zeta().order(), 2);
        assert!(k_subgroup().is_invariant(&GenAut::lambda()));
        assert_eq!(k_subgroup().image(&GenAut::zeta()), kstar_subgroup());
        // zeta lambda zeta = lambda^-1
        let z = GenAut::zeta();
        let l = GenAut::lambda();
        assert_eq!(z.compose(&l).compose(&z).compose(&l), GenAut::identity());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(conjugation_action([7, 1, 2, 3, 4, 5, 6]).unwrap(), GenAut::lambda());
        assert_eq!(conjugation_action([2, 1, 7, 6, 5, 4, 3]).unwrap(), GenAut::zeta());
        assert_eq!(conjugation_action([1, 2, 3, 4, 5, 6, 7]).unwrap(), GenAut::identity());
        assert!(conjugation_action([1, 1, 3, 4, 5, 6, 7]).is_err());
    }

    #[test]
    fn quotient_relations_for_k_and_kstar() {
        assert_eq!(quotient_relations(k_subgroup()).unwrap(), [0b001, 0b010, 0b100, 0b011, 0b110, 0b111, 0b101]);
        assert_eq!(quotient_relations(kstar_subgroup()).unwrap(), [0b001, 0b010, 0b100, 0b101, 0b111, 0b011, 0b110]);
        assert!(quotient_relations(generate(&[GroupElem::generator(1)])).is_err());
        assert_eq!(format_word(0b101, "b"), "b1b3");
    }

    #[test]
    fn fano_lines_for_k() {
        let lines = fano_lines(k_subgroup()).unwrap();
        assert_eq!(lines, vec![[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [2, 6, 7], [3, 4, 6], [4, 5, 7]]);
    }

    #[test]
    fn free_action() {
        assert!(acts_freely(k_subgroup()));
        assert!(acts_freely(kstar_subgroup()));
        assert!(!acts_freely(generate(&[GroupElem::generator(1)])));
    }

    #[test]
    fn lemma_cases_close_as_claimed() {
        for c in lemma_cases() {
            assert!(c.ok, "{} closes to order {}", c.element, c.closure.order());
        }
        assert_eq!(orbit_representatives(&GenAut::lambda()).len(), 9);
    }

    #[test]
    fn gaussian_binomials() {
        let v: Vec<_> = (0..=6).map(|k| gaussian_binomial_2(6, k)).collect();
        assert_eq!(v, vec![1, 63, 651, 1395, 651, 63, 1]);
    }
}
