use rand::Rng;
use serde::{Deserialize, Serialize};

use super::raw::RawRep;
use crate::cubes::{compose_cubes, disjoint_interiors, Configuration, LittleCube};
use crate::error::{Error, Result};
use crate::kgraph::{is_member, operad_compose, pairs, sigma_action, Arrow, CompleteGraphElement, EdgeState, Variant};
use crate::perm::Permutation;

/// A graph of `K̂_1(k)` with a little cube on every vertex; blank edges join
/// interior-disjoint cubes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabelledJson")]
pub struct LabelledGraph {
    graph: CompleteGraphElement,
    labels: Configuration,
}

#[derive(Deserialize)]
struct LabelledJson {
    graph: CompleteGraphElement,
    labels: Configuration,
}

impl TryFrom<LabelledJson> for LabelledGraph {
    type Error = Error;

    fn try_from(j: LabelledJson) -> Result<Self> {
        LabelledGraph::new(j.graph, j.labels)
    }
}

impl LabelledGraph {
    pub fn new(graph: CompleteGraphElement, labels: Configuration) -> Result<Self> {
        if graph.k() != labels.len() {
            return Err(Error::SizeMismatch(format!("{} labels for a graph on {} vertices", labels.len(), graph.k())));
        }
        if !is_member(&graph, Variant::KHat, 1) {
            return Err(Error::NotMember(format!("{graph} is not in K̂_1({})", graph.k())));
        }
        let cubes = labels.cubes();
        for ((p, q), e) in pairs(graph.k()).into_iter().zip(graph.edges()) {
            if e.is_blank() && !disjoint_interiors(&cubes[p], &cubes[q])? {
                return Err(Error::NotInDomain { p: p + 1, q: q + 1 });
            }
        }
        Ok(LabelledGraph { graph, labels })
    }

    pub fn graph(&self) -> &CompleteGraphElement {
        &self.graph
    }

    pub fn labels(&self) -> &Configuration {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.graph.k()
    }

    /// Blanks every arrow between interior-disjoint cubes; the result
    /// represents the same class.
    pub fn reduce(&self) -> LabelledGraph {
        let cubes = self.labels.cubes();
        let pp = pairs(self.k());
        let graph = self
            .graph
            .blank_where(|i, _| disjoint_interiors(&cubes[pp[i].0], &cubes[pp[i].1]).unwrap_or(false));
        LabelledGraph { graph, labels: self.labels.clone() }
    }

    /// Relabels vertex `p` as `σ(p)`, carrying its cube along.
    pub fn act(&self, sigma: &Permutation) -> Result<LabelledGraph> {
        let graph = sigma_action(sigma, &self.graph)?;
        let mut cubes = self.labels.cubes().to_vec();
        for (i, c) in self.labels.cubes().iter().enumerate() {
            cubes[sigma.apply(i)] = c.clone();
        }
        Ok(LabelledGraph { graph, labels: Configuration::new(cubes)? })
    }

    /// The unit: one vertex labelled by the whole cube.
    pub fn unit(n: usize) -> LabelledGraph {
        LabelledGraph {
            graph: CompleteGraphElement::blank(1),
            labels: Configuration::new(vec![LittleCube::identity(n)]).expect("one cube"),
        }
    }

    /// A random valid labelled graph: random cubes, then a random acyclic
    /// orientation (drawn from a random linear order) on the overlapping
    /// pairs, and on each disjoint pair an arrow with probability `1/3`.
    pub fn random<R: Rng + ?Sized>(k: usize, n: usize, denominator: i64, rng: &mut R) -> LabelledGraph {
        let labels = Configuration::random(k, n, denominator, rng);
        let order = Permutation::random(k, rng).inverse();
        let cubes = labels.cubes();
        let mut edges = Vec::new();
        for (p, q) in pairs(k) {
            let forced = !disjoint_interiors(&cubes[p], &cubes[q]).expect("same dimension");
            if forced || rng.gen_ratio(1, 3) {
                let a = if order.apply(p) < order.apply(q) { Arrow::new(p, q, 1) } else { Arrow::new(q, p, 1) };
                edges.push(EdgeState::Arrow(a));
            } else {
                edges.push(EdgeState::Blank);
            }
        }
        let graph = CompleteGraphElement::new(k, edges).expect("shape");
        LabelledGraph::new(graph, labels).expect("valid by construction")
    }
}

/// Orients exactly the pairs of cubes with overlapping interiors, from the
/// earlier to the later position in the product.
pub fn canonical_form(r: &RawRep) -> LabelledGraph {
    let pos = r.positions();
    let cubes = r.cubes().cubes();
    let edges = pairs(r.k())
        .into_iter()
        .map(|(p, q)| {
            if disjoint_interiors(&cubes[p], &cubes[q]).expect("same dimension") {
                EdgeState::Blank
            } else if pos[p] < pos[q] {
                EdgeState::Arrow(Arrow::new(p, q, 1))
            } else {
                EdgeState::Arrow(Arrow::new(q, p, 1))
            }
        })
        .collect();
    LabelledGraph { graph: CompleteGraphElement::new(r.k(), edges).expect("shape"), labels: r.cubes().clone() }
}

/// A representative whose product order extends the arrows of `g`: the
/// topological sort that always takes the smallest available vertex.
pub fn realize(g: &LabelledGraph) -> RawRep {
    let k = g.k();
    let mut indeg = vec![0usize; k];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
    for a in g.graph.arrows() {
        indeg[a.dst] += 1;
        out[a.src].push(a.dst);
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
    let mut word = Vec::with_capacity(k);
    while let Some(v) = ready.pop_first() {
        word.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    debug_assert_eq!(word.len(), k, "arrows of K̂_1 are acyclic");
    RawRep::new(Permutation::from_images(word).expect("topological order"), g.labels.clone()).expect("sizes agree")
}

/// Composition in `K̂_1 # C_n`: graphs compose in `K̂_1`, the label of vertex
/// `j` of block `i` is `x.labels[i] ∘ parts[i].labels[j]`, and the result is
/// brought back to canonical form.
pub fn tensor_compose(x: &LabelledGraph, parts: &[LabelledGraph]) -> Result<LabelledGraph> {
    if parts.len() != x.k() {
        return Err(Error::SizeMismatch(format!("{} parts for arity {}", parts.len(), x.k())));
    }
    let graphs: Vec<CompleteGraphElement> = parts.iter().map(|p| p.graph.clone()).collect();
    let graph = operad_compose(&x.graph, &graphs)?;
    let mut cubes = Vec::with_capacity(graph.k());
    for (i, part) in parts.iter().enumerate() {
        for c in part.labels.cubes() {
            cubes.push(compose_cubes(&x.labels.cubes()[i], c)?);
        }
    }
    let composed = LabelledGraph::new(graph, Configuration::new(cubes)?)?;
    Ok(canonical_form(&realize(&composed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::raw::{equivalent, raw_compose};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn square(lo: (i64, i64), hi: (i64, i64)) -> LittleCube {
        LittleCube::from_fractions(&[(lo.0, lo.1, hi.0, hi.1), (lo.0, lo.1, hi.0, hi.1)]).unwrap()
    }

    fn raw(perm: &[usize], cubes: Vec<LittleCube>) -> RawRep {
        RawRep::new(Permutation::from_one_based(perm).unwrap(), Configuration::new(cubes).unwrap()).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        let a = square((0, 1), (1, 2));
        let b = square((1, 4), (3, 4));
        let far = square((1, 2), (1, 1));
        let cf = canonical_form(&raw(&[1, 2], vec![a.clone(), b.clone()]));
        assert_eq!(cf.graph(), &CompleteGraphElement::from_arrows(2, &[(1, 2, 1)]).unwrap());
        let cf = canonical_form(&raw(&[2, 1], vec![a.clone(), b.clone()]));
        assert_eq!(cf.graph(), &CompleteGraphElement::from_arrows(2, &[(2, 1, 1)]).unwrap());
        let small = square((0, 1), (1, 4));
        for perm in [[1, 2], [2, 1]] {
            let cf = canonical_form(&raw(&perm, vec![small.clone(), far.clone()]));
            assert_eq!(cf.graph(), &CompleteGraphElement::blank(2));
        }
        // pairwise overlapping: a tournament listing the product order
        let cf = canonical_form(&raw(&[3, 1, 2], vec![a.clone(), b.clone(), a]));
        assert_eq!(cf.graph(), &CompleteGraphElement::from_arrows(3, &[(3, 1, 1), (3, 2, 1), (1, 2, 1)]).unwrap());
    }

    #[test]
    fn realize_examples() {
        let all = LittleCube::identity(2);
        let g = LabelledGraph::new(
            CompleteGraphElement::from_arrows(3, &[(3, 1, 1), (3, 2, 1), (1, 2, 1)]).unwrap(),
            Configuration::new(vec![all.clone(), all.clone(), all]).unwrap(),
        )
        .unwrap();
        assert_eq!(realize(&g).perm().to_one_based(), vec![3, 1, 2]);
        let spread = Configuration::new(vec![
            square((0, 1), (1, 4)),
            square((1, 3), (1, 2)),
            square((2, 3), (1, 1)),
        ])
        .unwrap();
        let g = LabelledGraph::new(CompleteGraphElement::blank(3), spread).unwrap();
        assert!(realize(&g).perm().is_identity());
    }

    #[test]
    fn validation() {
        let a = square((0, 1), (1, 2));
        let b = square((1, 4), (3, 4));
        let labels = Configuration::new(vec![a, b]).unwrap();
        assert_eq!(
            LabelledGraph::new(CompleteGraphElement::blank(2), labels.clone()).unwrap_err(),
            Error::NotInDomain { p: 1, q: 2 }
        );
        let two = CompleteGraphElement::from_arrows(2, &[(1, 2, 2)]).unwrap();
        assert!(LabelledGraph::new(two, labels.clone()).is_err());
        assert!(LabelledGraph::new(CompleteGraphElement::blank(3), labels).is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let k = rng.gen_range(0..=5);
            let n = rng.gen_range(1..=3);
            let g = LabelledGraph::random(k, n, 4, &mut rng);
            let back = canonical_form(&realize(&g));
            assert_eq!(back, g.reduce());
            assert_eq!(canonical_form(&realize(&back)), back);
        }
    }

    #[test]
    fn equivalence_is_equality_of_canonical_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let k = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=2);
            let cubes = Configuration::random(k, n, 3, &mut rng);
            let r1 = RawRep::new(Permutation::random(k, &mut rng), cubes.clone()).unwrap();
            let r2 = RawRep::new(Permutation::random(k, &mut rng), cubes).unwrap();
            assert_eq!(equivalent(&r1, &r2).unwrap(), canonical_form(&r1) == canonical_form(&r2));
        }
    }

    #[test]
    fn composition_matches_raw_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..300 {
            let n = rng.gen_range(1..=2);
            let k = rng.gen_range(0..=3);
            let outer = RawRep::new(Permutation::random(k, &mut rng), Configuration::random(k, n, 4, &mut rng)).unwrap();
            let parts: Vec<RawRep> = (0..k)
                .map(|_| {
                    let m = rng.gen_range(0..=2);
                    RawRep::new(Permutation::random(m, &mut rng), Configuration::random(m, n, 4, &mut rng)).unwrap()
                })
                .collect();
            let lhs = canonical_form(&raw_compose(&outer, &parts).unwrap());
            let cparts: Vec<LabelledGraph> = parts.iter().map(canonical_form).collect();
            let rhs = tensor_compose(&canonical_form(&outer), &cparts).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unit_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let k = rng.gen_range(0..=4);
            let g = canonical_form(&realize(&LabelledGraph::random(k, 2, 6, &mut rng)));
            let units = vec![LabelledGraph::unit(2); k];
            assert_eq!(tensor_compose(&g, &units).unwrap(), g);
            assert_eq!(tensor_compose(&LabelledGraph::unit(2), std::slice::from_ref(&g)).unwrap(), g);
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let g = LabelledGraph::random(3, 2, 4, &mut rng);
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with(r#"{"graph":{"k":3"#));
        assert_eq!(serde_json::from_str::<LabelledGraph>(&s).unwrap(), g);
    }
}
