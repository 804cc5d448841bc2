use primpoints_core::permact::corpus::{symmetric_group, transitive_groups};
use primpoints_core::permact::{is_primitive_action, minimal_blocks, PermGroup};

/// Every partition of `0..n` into blocks of size `k`, built by always
/// placing the smallest unused point.
fn uniform_partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(used: &mut Vec<bool>, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some(first) = used.iter().position(|u| !u) else {
            out.push(cur.clone());
            return;
        };
        used[first] = true;
        let rest: Vec<usize> = (first + 1..used.len()).filter(|&i| !used[i]).collect();
        for combo in combinations(&rest, k - 1) {
            for &i in &combo {
                used[i] = true;
            }
            let mut block = vec![first];
            block.extend(&combo);
            cur.push(block);
            go(used, k, cur, out);
            cur.pop();
            for &i in &combo {
                used[i] = false;
            }
        }
        used[first] = false;
    }
    let mut out = Vec::new();
    go(&mut vec![false; n], k, &mut Vec::new(), &mut out);
    out
}

fn combinations(xs: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if xs.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = combinations(&xs[1..], k - 1);
    for c in &mut with {
        c.insert(0, xs[0]);
    }
    with.extend(combinations(&xs[1..], k));
    with
}

/// Exhaustive oracle: a nontrivial partition stable under all generators.
fn has_nontrivial_block_system(g: &PermGroup) -> bool {
    let n = g.degree();
    (2..n).filter(|k| n.is_multiple_of(*k)).any(|k| {
        uniform_partitions(n, k).into_iter().any(|part| {
            let mut owner = vec![0; n];
            for (b, block) in part.iter().enumerate() {
                for &i in block {
                    owner[i] = b;
                }
            }
            g.generators().iter().all(|s| {
                part.iter().all(|block| block.iter().all(|&i| owner[s.apply(i)] == owner[s.apply(block[0])]))
            })
        })
    })
}

#[test]
fn partition_oracle_counts() {
    // 7!! = 105 pairings and 35 halvings of 8 points
    assert_eq!(uniform_partitions(8, 2).len(), 105);
    assert_eq!(uniform_partitions(8, 4).len(), 35);
}

#[test]
fn degree_eight_spot_checks() {
    let cases: [(&str, &[&str], bool); 5] = [
        ("C8", &["(0 1 2 3 4 5 6 7)"], false),
        ("D8", &["(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"], false),
        ("C2 wr C4", &["(0 4)", "(0 1 2 3)(4 5 6 7)"], false),
        // x -> x + 1 and x -> -1/x on the projective line over F7, infinity = 7
        ("PSL(2,7)", &["(0 1 2 3 4 5 6)", "(0 7)(1 6)(2 3)(4 5)"], true),
        // translations and multiplication by t on F8 = F2[t]/(t^3+t+1)
        ("AGL(1,8)", &["(0 1)(2 3)(4 5)(6 7)", "(0 2)(1 3)(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)", "(1 2 4 3 6 7 5)"], true),
    ];
    for (name, gens, primitive) in cases {
        let g = PermGroup::from_cycles(8, gens).unwrap();
        assert_eq!(!has_nontrivial_block_system(&g), primitive, "{name}: oracle");
        assert_eq!(is_primitive_action(&g).unwrap(), primitive, "{name}");
        assert_eq!(minimal_blocks(&g, 0).unwrap().is_none(), primitive, "{name}: blocks");
    }
}

#[test]
fn primitive_subgroup_forces_primitive_group() {
    let mut checked = 0;
    for n in 2..=6 {
        let sym = symmetric_group(n);
        let groups = transitive_groups(n);
        for small in &groups {
            if !is_primitive_action(&small.group).unwrap() {
                continue;
            }
            for big in &groups {
                if big.order() <= small.order() || big.order() % small.order() != 0 {
                    continue;
                }
                // realize a conjugate of `small` inside `big` on the same points
                let Some(c) = sym.iter().find(|c| small.group.generators().iter().all(|x| big.contains(&x.conjugate_by(c))))
                else {
                    continue;
                };
                let inner = PermGroup::new(n, small.group.generators().iter().map(|x| x.conjugate_by(c)).collect()).unwrap();
                assert!(is_primitive_action(&inner).unwrap());
                assert!(is_primitive_action(&big.group).unwrap(), "degree {n}: order {} in {}", small.order(), big.order());
                checked += 1;
            }
        }
    }
    assert!(checked >= 10, "only {checked} pairs");
}
