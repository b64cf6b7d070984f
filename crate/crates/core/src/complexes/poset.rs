use std::collections::BTreeSet;

/// A finite poset on `0..len`, stored by its upper covering relation.
/// The strict upper sets are derived by transitive closure on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    covers: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// From upper covers: `covers[x]` lists the elements covering `x`.
    ///
    /// Panics if the relation has a cycle.
    pub fn from_covers(covers: Vec<Vec<usize>>) -> Self {
        let n = covers.len();
        let mut above: Vec<Option<Vec<usize>>> = vec![None; n];
        // iterative post-order so deep posets do not overflow the stack
        let mut state = vec![0u8; n];
        for root in 0..n {
            if state[root] == 2 {
                continue;
            }
            let mut stack = vec![(root, false)];
            while let Some((x, expanded)) = stack.pop() {
                if expanded {
                    let mut set = BTreeSet::new();
                    for &y in &covers[x] {
                        set.insert(y);
                        set.extend(above[y].as_ref().expect("child finished").iter().copied());
                    }
                    above[x] = Some(set.into_iter().collect());
                    state[x] = 2;
                    continue;
                }
                match state[x] {
                    2 => continue,
                    1 => panic!("covering relation has a cycle through {x}"),
                    _ => {}
                }
                state[x] = 1;
                stack.push((x, true));
                for &y in &covers[x] {
                    if state[y] == 1 {
                        panic!("covering relation has a cycle through {y}");
                    }
                    if state[y] == 0 {
                        stack.push((y, false));
                    }
                }
            }
        }
        let covers = covers
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Self { covers, above: above.into_iter().map(|a| a.unwrap_or_default()).collect() }
    }

    /// From an order predicate `leq(i, j)`, by pairwise comparison.
    pub fn from_leq(len: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let above: Vec<Vec<usize>> =
            (0..len).map(|x| (0..len).filter(|&y| y != x && leq(x, y)).collect()).collect();
        let covers = (0..len)
            .map(|x| {
                above[x]
                    .iter()
                    .copied()
                    .filter(|&y| !above[x].iter().any(|&z| z != y && above[z].binary_search(&y).is_ok()))
                    .collect()
            })
            .collect();
        Self::from_covers(covers)
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    /// Elements strictly above `x`, sorted.
    pub fn strictly_above(&self, x: usize) -> &[usize] {
        &self.above[x]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].binary_search(&y).is_ok()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    /// Minimal elements.
    pub fn atoms(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for ups in &self.covers {
            for &y in ups {
                has_lower[y] = true;
            }
        }
        (0..self.len()).filter(|&x| !has_lower[x]).collect()
    }

    /// Every chain `x_0 < x_1 < ... < x_d`, grouped by `d`.
    pub fn chains(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut chain = Vec::new();
        for x in 0..self.len() {
            chain.push(x);
            self.extend_chain(&mut chain, &mut out);
            chain.pop();
        }
        out
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let d = chain.len() - 1;
        if out.len() <= d {
            out.resize(d + 1, Vec::new());
        }
        out[d].push(chain.clone());
        let top = *chain.last().expect("nonempty chain");
        for &y in &self.above[top] {
            chain.push(y);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }

    /// Number of chains, computed without materialising them.
    pub fn chain_count(&self) -> u128 {
        // chains starting at x = 1 + sum over y > x of chains starting at y
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.above[x].len()));
        let mut memo = vec![0u128; self.len()];
        for &x in order.iter().rev() {
            memo[x] = 1 + self.above[x].iter().map(|&y| memo[y]).sum::<u128>();
        }
        memo.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_chains() {
        // nonempty subsets of {0,1,2} under inclusion
        let sets: Vec<u8> = (1..8).collect();
        let p = FinitePoset::from_leq(sets.len(), |i, j| sets[i] & !sets[j] == 0);
        assert_eq!(p.atoms().len(), 3);
        assert_eq!(p.chain_count(), p.chains().iter().map(|c| c.len() as u128).sum::<u128>());
        // barycentric subdivision of a triangle: 7 vertices, 12 edges, 6 triangles
        let chains = p.chains();
        assert_eq!(chains.iter().map(Vec::len).collect::<Vec<_>>(), vec![7, 12, 6]);
    }

    #[test]
    fn covers_and_leq_agree() {
        let divides = |a: usize, b: usize| b.is_multiple_of(a);
        let elems: Vec<usize> = (1..=12).collect();
        let p = FinitePoset::from_leq(elems.len(), |i, j| divides(elems[i], elems[j]));
        let q = FinitePoset::from_covers((0..elems.len()).map(|i| p.covers(i).to_vec()).collect());
        assert_eq!(p, q);
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                assert_eq!(p.leq(i, j), divides(elems[i], elems[j]));
            }
        }
    }

    #[test]
    fn antichain() {
        let p = FinitePoset::from_covers(vec![vec![], vec![]]);
        assert_eq!(p.atoms(), vec![0, 1]);
        assert_eq!(p.chains(), vec![vec![vec![0], vec![1]]]);
    }
}
