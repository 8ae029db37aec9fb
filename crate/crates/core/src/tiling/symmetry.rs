use alloc::vec::Vec;

use super::dissection::{same_edge, Dissection, Target};
use super::geometry::{AffineMap, Point};
use crate::{Error, Result};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// All isometries of a convex polygon onto itself, found by trying every
/// permutation of its vertices and keeping those realized by an isometry.
pub fn polygon_symmetries(vertices: &[Point]) -> Vec<AffineMap> {
    let n = vertices.len();
    let src = [vertices[0].clone(), vertices[1].clone(), vertices[2].clone()];
    let mut maps = Vec::new();
    for perm in permutations(n) {
        let dst = [vertices[perm[0]].clone(), vertices[perm[1]].clone(), vertices[perm[2]].clone()];
        let Ok(map) = AffineMap::from_triangles(&src, &dst) else {
            continue;
        };
        if map.is_isometry() && (0..n).all(|i| map.apply(&vertices[i]) == vertices[perm[i]]) {
            maps.push(map);
        }
    }
    maps
}

/// The dihedral group of a square (order 8) or equilateral target (order 6).
pub fn target_symmetries(target: &Target) -> Result<Vec<AffineMap>> {
    match target {
        Target::Square { .. } | Target::Equilateral { .. } => Ok(polygon_symmetries(&target.vertices())),
        Target::Triangle(_) => {
            Err(Error::InvalidArgument("symmetry order is defined for square and equilateral targets".into()))
        }
    }
}

/// Order of the subgroup of the target's symmetries mapping the set of piece
/// edges onto itself.
pub fn symmetry_order(d: &Dissection) -> Result<usize> {
    let edges = d.edge_set();
    let group = target_symmetries(&d.target)?;
    Ok(group
        .iter()
        .filter(|g| {
            edges.iter().all(|(a, b)| {
                let image = (g.apply(a), g.apply(b));
                edges.iter().any(|e| same_edge(e, &image))
            })
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::FieldValue;
    use crate::tiling::dissection::*;

    #[test]
    fn group_orders() {
        let sq = Target::square(FieldValue::one()).unwrap();
        assert_eq!(target_symmetries(&sq).unwrap().len(), 8);
        let eq = Target::equilateral(FieldValue::integer(2)).unwrap();
        assert_eq!(target_symmetries(&eq).unwrap().len(), 6);
    }

    #[test]
    fn stabilizers() {
        let one = FieldValue::one();
        let two = FieldValue::integer(2);
        assert_eq!(symmetry_order(&timaeus_square(one.clone()).unwrap()).unwrap(), 8);
        assert_eq!(symmetry_order(&economical_square(one).unwrap()).unwrap(), 4);
        assert_eq!(symmetry_order(&timaeus_equilateral(two.clone()).unwrap()).unwrap(), 6);
        assert_eq!(symmetry_order(&economical_equilateral(two).unwrap()).unwrap(), 2);
    }
}
