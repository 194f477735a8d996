//! JSON and DOT serializations of a computed lattice.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use serde::{Deserialize, Serialize};

use cdlat_core::bitset::BitSet;
use cdlat_core::cd::CdLattice;
use cdlat_core::group::{generators_fast, is_abelian, FiniteGroup, Subgroup};
use cdlat_core::lattice::AbstractLattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub order: usize,
    pub generator_indices: Vec<u32>,
    pub centralizer_index: usize,
    /// Base64 of the membership bitset as little-endian 64-bit words.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bits: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub group: GroupInfo,
    pub mstar: u64,
    pub members: Vec<MemberJson>,
    /// Covering pairs `[lower, upper]`.
    pub leq: Vec<[usize; 2]>,
}

pub fn encode_bits(b: &BitSet) -> String {
    let bytes: Vec<u8> = b.words().iter().flat_map(|w| w.to_le_bytes()).collect();
    STANDARD.encode(bytes)
}

pub fn decode_bits(s: &str, len: usize) -> Result<BitSet, String> {
    let bytes = STANDARD.decode(s).map_err(|e| format!("bad base64 membership: {e}"))?;
    if bytes.len() % 8 != 0 || bytes.len() != len.div_ceil(64) * 8 {
        return Err(format!("membership has {} bytes for {len} elements", bytes.len()));
    }
    let words = bytes
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Ok(BitSet::from_words(len, words))
}

pub fn to_json(spec: &str, l: &CdLattice, full_membership: bool) -> LatticeJson {
    let g = l.group();
    let members = l
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| MemberJson {
            order: m.order(),
            generator_indices: generators_fast(g, &m.subgroup),
            centralizer_index: l.centralizer_index(i),
            bits: full_membership.then(|| encode_bits(m.subgroup.bits())),
        })
        .collect();
    LatticeJson {
        group: GroupInfo {
            spec: spec.to_string(),
            order: g.order(),
        },
        mstar: l.mstar(),
        members,
        leq: l.covers().iter().map(|&(a, b)| [a, b]).collect(),
    }
}

impl LatticeJson {
    pub fn to_lattice(&self) -> cdlat_core::Result<AbstractLattice> {
        let covers: Vec<(usize, usize)> = self.leq.iter().map(|p| (p[0], p[1])).collect();
        AbstractLattice::from_covers(self.members.len(), &covers)
    }
}

/// Invariants of an abelian group from element-order counts, as a list of
/// `(p, [exponents of cyclic factors])`.
fn abelian_invariants(g: &FiniteGroup, h: &Subgroup) -> BTreeMap<usize, Vec<u32>> {
    let mut n = h.order();
    let mut primes = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    let orders: Vec<usize> = h.elements().map(|x| g.element_order(x)).collect();
    let mut out = BTreeMap::new();
    for p in primes {
        // c[i] = #{x in the Sylow p-part : x^(p^i) = 1}
        let mut c = vec![1usize];
        let mut pi = 1usize;
        loop {
            pi *= p;
            let count = orders.iter().filter(|&&o| pi % o == 0).count();
            if count == *c.last().unwrap() {
                break;
            }
            c.push(count);
        }
        let log = |mut v: usize| {
            let mut e = 0;
            while v > 1 {
                v /= p;
                e += 1;
            }
            e
        };
        // Factors of order at least p^i number log_p(c[i] / c[i-1]).
        let at_least: Vec<usize> = (1..c.len()).map(|i| log(c[i] / c[i - 1])).collect();
        let mut exps = Vec::new();
        for (i, &k) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            for _ in 0..k - next {
                exps.push(i as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(p, exps);
    }
    out
}

/// `"1"`, `"nonabelian"`, or the abelian type such as `"C2^4 x C3^2"`.
pub fn structure_tag(g: &FiniteGroup, h: &Subgroup) -> String {
    if h.order() == 1 {
        return "1".into();
    }
    if !is_abelian(g, h) {
        return "nonabelian".into();
    }
    let mut parts = Vec::new();
    for (p, exps) in abelian_invariants(g, h) {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for e in exps {
            *counts.entry(e).or_default() += 1;
        }
        for (e, k) in counts.into_iter().rev() {
            let c = p.pow(e);
            parts.push(if k == 1 { format!("C{c}") } else { format!("C{c}^{k}") });
        }
    }
    parts.join(" x ")
}

/// Hasse diagram with one edge per covering pair, drawn bottom to top.
pub fn to_dot(spec: &str, l: &CdLattice) -> String {
    let g = l.group();
    let mut out = String::new();
    writeln!(out, "digraph cd {{").unwrap();
    writeln!(out, "  label=\"CD({})\";", spec.replace('"', "'")).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, m) in l.members().iter().enumerate() {
        let tag = structure_tag(g, &m.subgroup);
        writeln!(out, "  n{i} [label=\"{}\\n{}\"];", m.order(), tag).unwrap();
    }
    for &(a, b) in l.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cdlat_core::cd::cd_lattice;
    use cdlat_core::group::Subgroup;
    use cdlat_core::zoo::{cyclic, elemab, parse_spec, q8};

    #[test]
    fn bits_round_trip() {
        let b = BitSet::from_indices(130, [0, 5, 64, 129]);
        assert_eq!(decode_bits(&encode_bits(&b), 130).unwrap(), b);
        assert!(decode_bits(&encode_bits(&b), 64).is_err());
        assert!(decode_bits("not base64!", 130).is_err());
    }

    #[test]
    fn structure_tags() {
        let g = parse_spec("prod(cyclic(4),cyclic(2),cyclic(9))").unwrap().eval().unwrap().group;
        assert_eq!(structure_tag(&g, &Subgroup::whole(&g)), "C4 x C2 x C9");
        let e = elemab(2, 4).unwrap();
        assert_eq!(structure_tag(&e, &Subgroup::whole(&e)), "C2^4");
        let c = cyclic(1).unwrap();
        assert_eq!(structure_tag(&c, &Subgroup::whole(&c)), "1");
        let q = q8();
        assert_eq!(structure_tag(&q, &Subgroup::whole(&q)), "nonabelian");
    }

    #[test]
    fn json_round_trip() {
        let l = cd_lattice(&q8()).unwrap();
        let j = to_json("q8", &l, true);
        let text = serde_json::to_string(&j).unwrap();
        let back: LatticeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.to_lattice().unwrap().len(), 5);
        let plain = to_json("q8", &l, false);
        assert!(!serde_json::to_string(&plain).unwrap().contains("bits"));
    }
}
