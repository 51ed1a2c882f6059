//! Stock categories used throughout the test suites and the bundled
//! example inputs: posets, the walking arrow and isomorphism, skeleta of
//! finite sets, and collages (Grothendieck constructions) of functors.

use std::collections::BTreeMap;
use std::rc::Rc;

use super::category::{CategoryBuilder, CategoryError, FinCategory, MorId, ObjId};
use super::functor::FinFunctor;

/// The category with one object `pt` and its identity.
pub fn terminal_category() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.object("pt");
    b.build().expect("terminal category is valid")
}

/// Two objects `a`, `b` and a single arrow `f: a -> b`.
pub fn walking_arrow() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.object("a").object("b");
    b.morphism("f", "a", "b");
    b.build().expect("walking arrow is valid")
}

/// Two objects `a`, `b` and mutually inverse arrows `u: a -> b`,
/// `v: b -> a`.
pub fn walking_iso() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.object("a").object("b");
    b.morphism("u", "a", "b").morphism("v", "b", "a");
    b.composite("v", "u", "id_a").composite("u", "v", "id_b");
    b.build().expect("walking isomorphism is valid")
}

/// The category of a finite poset.  `leq` must be a partial order on the
/// indices of `names` (checked by assertion); non-identity arrows are
/// named `le_<src>_<tgt>`.
pub fn poset_category(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let n = names.len();
    for i in 0..n {
        assert!(leq(i, i), "poset relation must be reflexive");
        for j in 0..n {
            if i != j {
                assert!(
                    !(leq(i, j) && leq(j, i)),
                    "poset relation must be antisymmetric"
                );
            }
            for k in 0..n {
                assert!(
                    !(leq(i, j) && leq(j, k)) || leq(i, k),
                    "poset relation must be transitive"
                );
            }
        }
    }
    let arrow = |i: usize, j: usize| format!("le_{}_{}", names[i], names[j]);
    let mut b = CategoryBuilder::new();
    for name in names {
        b.object(name);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq(i, j) {
                b.morphism(&arrow(i, j), names[i], names[j]);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && leq(i, j) && leq(j, k) {
                    let h = if i == k {
                        format!("id_{}", names[i])
                    } else {
                        arrow(i, k)
                    };
                    b.composite(&arrow(j, k), &arrow(i, j), &h);
                }
            }
        }
    }
    b.build().expect("a poset presents a valid category")
}

/// The linear order `v0 < v1 < ... < vn` as a category.
pub fn chain_poset(n: usize) -> FinCategory {
    let names: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    poset_category(&refs, |a, b| a <= b)
}

/// The divisors of `n` ordered by divisibility.
pub fn divisor_lattice(n: u64) -> FinCategory {
    assert!(n > 0);
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let names: Vec<String> = divisors.iter().map(u64::to_string).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    poset_category(&refs, |a, b| divisors[b] % divisors[a] == 0)
}

fn function_name(a: usize, b: usize, img: &[usize]) -> String {
    let digits: String = if img.is_empty() {
        "e".to_owned()
    } else {
        img.iter().map(usize::to_string).collect()
    };
    format!("f{a}to{b}_{digits}")
}

fn is_identity_function(a: usize, b: usize, img: &[usize]) -> bool {
    a == b && img.iter().enumerate().all(|(i, &v)| i == v)
}

/// The skeleton of finite sets of size at most `max`: objects `n0..nmax`
/// (the set `nk` has `k` elements), morphisms all functions, named
/// `f<a>to<b>_<images>` with `e` standing for the empty image list.
pub fn finset_skeleton(max: usize) -> Result<FinCategory, CategoryError> {
    assert!(max <= 4, "skeleton beyond size 4 is intentionally unsupported");
    let mut functions: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            if b == 0 && a > 0 {
                continue;
            }
            // Enumerate [b]^a by counting in base b.
            let mut img = vec![0usize; a];
            loop {
                functions.push((a, b, img.clone()));
                let mut i = 0;
                loop {
                    if i == a {
                        break;
                    }
                    img[i] += 1;
                    if img[i] < b {
                        break;
                    }
                    img[i] = 0;
                    i += 1;
                }
                if i == a {
                    break;
                }
            }
        }
    }
    let mut b = CategoryBuilder::new();
    for n in 0..=max {
        b.object(&format!("n{n}"));
    }
    for (sa, sb, img) in &functions {
        if !is_identity_function(*sa, *sb, img) {
            b.morphism(
                &function_name(*sa, *sb, img),
                &format!("n{sa}"),
                &format!("n{sb}"),
            );
        }
    }
    let resolve = |a: usize, bb: usize, img: &[usize]| {
        if is_identity_function(a, bb, img) {
            format!("id_n{a}")
        } else {
            function_name(a, bb, img)
        }
    };
    for (fa, fb, fimg) in &functions {
        if is_identity_function(*fa, *fb, fimg) {
            continue;
        }
        for (ga, gb, gimg) in &functions {
            if ga != fb || is_identity_function(*ga, *gb, gimg) {
                continue;
            }
            let himg: Vec<usize> = fimg.iter().map(|&i| gimg[i]).collect();
            b.composite(
                &function_name(*ga, *gb, gimg),
                &function_name(*fa, *fb, fimg),
                &resolve(*fa, *gb, &himg),
            );
        }
    }
    b.build()
}

/// The collage (Grothendieck construction) of a functor `F: A -> B`,
/// fibered over the walking arrow `v0 -> v1`.
///
/// Objects are `0_<a>` and `1_<b>`; fiber morphisms keep their names
/// behind a `0_`/`1_` prefix, and for every object `a` of `A` and arrow
/// `phi: F(a) -> b` of `B` there is a cross morphism `x_<a>_<phi>`.
#[derive(Clone, Debug)]
pub struct Collage {
    pub cat: Rc<FinCategory>,
    pub base: Rc<FinCategory>,
    /// The projection onto [`chain_poset`]`(1)`.
    pub projection: FinFunctor,
    /// The defining functor `F: A -> B`.
    pub functor: FinFunctor,
    obj0: Vec<ObjId>,
    obj1: Vec<ObjId>,
    mor0: Vec<MorId>,
    mor1: Vec<MorId>,
    cross: BTreeMap<(ObjId, MorId), MorId>,
}

impl Collage {
    pub fn fiber0_obj(&self, a: ObjId) -> ObjId {
        self.obj0[a.0]
    }

    pub fn fiber1_obj(&self, b: ObjId) -> ObjId {
        self.obj1[b.0]
    }

    pub fn fiber0_mor(&self, m: MorId) -> MorId {
        self.mor0[m.0]
    }

    pub fn fiber1_mor(&self, m: MorId) -> MorId {
        self.mor1[m.0]
    }

    /// The cross morphism attached to `a` in `A` and `phi: F(a) -> b`.
    pub fn cross(&self, a: ObjId, phi: MorId) -> Option<MorId> {
        self.cross.get(&(a, phi)).copied()
    }

    /// Cross morphism by the names in the original categories.
    pub fn cross_mor(&self, a_name: &str, phi_name: &str) -> Option<MorId> {
        let a = self.functor.source().find_object(a_name)?;
        let phi = self.functor.target().find_morphism(phi_name)?;
        self.cross(a, phi)
    }

    /// The canonical lift of the base arrow at `a`, namely
    /// `x_<a>_<id_{F(a)}>`.
    pub fn canonical_lift(&self, a: ObjId) -> MorId {
        let fa = self.functor.apply_obj(a);
        self.cross(a, self.functor.target().id(fa))
            .expect("identity crosses always exist")
    }
}

/// Builds the collage of `f: A -> B`.
pub fn collage(f: &FinFunctor) -> Result<Collage, CategoryError> {
    let a_cat = f.source();
    let b_cat = f.target();
    let name0 = |m: MorId| format!("0_{}", a_cat.mor_name(m));
    let name1 = |m: MorId| format!("1_{}", b_cat.mor_name(m));
    let resolve0 = |m: MorId| {
        if a_cat.is_identity(m) {
            format!("id_0_{}", a_cat.object_name(a_cat.src(m)))
        } else {
            name0(m)
        }
    };
    let resolve1 = |m: MorId| {
        if b_cat.is_identity(m) {
            format!("id_1_{}", b_cat.object_name(b_cat.src(m)))
        } else {
            name1(m)
        }
    };
    let cross_name =
        |a: ObjId, phi: MorId| format!("x_{}_{}", a_cat.object_name(a), b_cat.mor_name(phi));

    let mut b = CategoryBuilder::new();
    for o in a_cat.objects() {
        b.object(&format!("0_{}", a_cat.object_name(o)));
    }
    for o in b_cat.objects() {
        b.object(&format!("1_{}", b_cat.object_name(o)));
    }
    for m in a_cat.morphisms().filter(|&m| !a_cat.is_identity(m)) {
        b.morphism(
            &name0(m),
            &format!("0_{}", a_cat.object_name(a_cat.src(m))),
            &format!("0_{}", a_cat.object_name(a_cat.tgt(m))),
        );
    }
    for m in b_cat.morphisms().filter(|&m| !b_cat.is_identity(m)) {
        b.morphism(
            &name1(m),
            &format!("1_{}", b_cat.object_name(b_cat.src(m))),
            &format!("1_{}", b_cat.object_name(b_cat.tgt(m))),
        );
    }
    let mut crosses: Vec<(ObjId, MorId)> = Vec::new();
    for a in a_cat.objects() {
        for phi in b_cat.morphisms() {
            if b_cat.src(phi) == f.apply_obj(a) {
                crosses.push((a, phi));
                b.morphism(
                    &cross_name(a, phi),
                    &format!("0_{}", a_cat.object_name(a)),
                    &format!("1_{}", b_cat.object_name(b_cat.tgt(phi))),
                );
            }
        }
    }

    // Fiber-0 composites.
    for g in a_cat.morphisms().filter(|&m| !a_cat.is_identity(m)) {
        for fm in a_cat.morphisms().filter(|&m| !a_cat.is_identity(m)) {
            if let Some(h) = a_cat.compose(g, fm) {
                b.composite(&name0(g), &name0(fm), &resolve0(h));
            }
        }
    }
    // Fiber-1 composites.
    for g in b_cat.morphisms().filter(|&m| !b_cat.is_identity(m)) {
        for fm in b_cat.morphisms().filter(|&m| !b_cat.is_identity(m)) {
            if let Some(h) = b_cat.compose(g, fm) {
                b.composite(&name1(g), &name1(fm), &resolve1(h));
            }
        }
    }
    // Cross after fiber-0: x(a, phi) . 0_m = x(a', phi . F(m)).
    for &(a, phi) in &crosses {
        for m in a_cat.morphisms().filter(|&m| !a_cat.is_identity(m)) {
            if a_cat.tgt(m) != a {
                continue;
            }
            let phi2 = b_cat
                .compose(phi, f.apply_mor(m))
                .expect("F preserves composability");
            b.composite(
                &cross_name(a, phi),
                &name0(m),
                &cross_name(a_cat.src(m), phi2),
            );
        }
    }
    // Fiber-1 after cross: 1_psi . x(a, phi) = x(a, psi . phi).
    for &(a, phi) in &crosses {
        for psi in b_cat.morphisms().filter(|&m| !b_cat.is_identity(m)) {
            if b_cat.src(psi) != b_cat.tgt(phi) {
                continue;
            }
            let phi2 = b_cat.compose(psi, phi).expect("checked composable");
            b.composite(&name1(psi), &cross_name(a, phi), &cross_name(a, phi2));
        }
    }

    let cat = Rc::new(b.build()?);
    let base = Rc::new(chain_poset(1));
    let v0 = base.find_object("v0").unwrap();
    let v1 = base.find_object("v1").unwrap();
    let le = base.find_morphism("le_v0_v1").unwrap();
    let obj0: Vec<ObjId> = a_cat
        .objects()
        .map(|o| cat.find_object(&format!("0_{}", a_cat.object_name(o))).unwrap())
        .collect();
    let obj1: Vec<ObjId> = b_cat
        .objects()
        .map(|o| cat.find_object(&format!("1_{}", b_cat.object_name(o))).unwrap())
        .collect();
    let mor0: Vec<MorId> = a_cat
        .morphisms()
        .map(|m| cat.find_morphism(&resolve0(m)).unwrap())
        .collect();
    let mor1: Vec<MorId> = b_cat
        .morphisms()
        .map(|m| cat.find_morphism(&resolve1(m)).unwrap())
        .collect();
    let cross: BTreeMap<(ObjId, MorId), MorId> = crosses
        .iter()
        .map(|&(a, phi)| ((a, phi), cat.find_morphism(&cross_name(a, phi)).unwrap()))
        .collect();
    let projection = {
        let obj_map = cat
            .objects()
            .map(|o| {
                if cat.object_name(o).starts_with("0_") {
                    v0
                } else {
                    v1
                }
            })
            .collect();
        let mor_map = cat
            .morphisms()
            .map(|m| {
                let name = cat.mor_name(m);
                if name.starts_with("x_") {
                    le
                } else if name.starts_with("0_") || name.starts_with("id_0_") {
                    base.id(v0)
                } else {
                    base.id(v1)
                }
            })
            .collect();
        FinFunctor::new(Rc::clone(&cat), Rc::clone(&base), obj_map, mor_map)
            .expect("collage projection is a functor")
    };
    Ok(Collage {
        cat,
        base,
        projection,
        functor: f.clone(),
        obj0,
        obj1,
        mor0,
        mor1,
        cross,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_poset_1_is_the_walking_arrow_in_disguise() {
        let c = chain_poset(1);
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.mor_count(), 3);
    }

    #[test]
    fn divisor_lattice_of_prime_power_is_a_chain() {
        let c = divisor_lattice(8); // 1 | 2 | 4 | 8
        assert_eq!(c.object_count(), 4);
        assert_eq!(c.mor_count(), 4 + 6);
    }

    #[test]
    fn finset_function_names_are_consistent() {
        let c = finset_skeleton(3).unwrap();
        let f = c.find_morphism("f2to3_02").unwrap();
        assert_eq!(c.object_name(c.src(f)), "n2");
        assert_eq!(c.object_name(c.tgt(f)), "n3");
        // Composition: (0,2) into [3] followed by the constant 3->1 map.
        let g = c.find_morphism("f3to1_000").unwrap();
        let h = c.compose(g, f).unwrap();
        assert_eq!(c.mor_name(h), "f2to1_00");
    }

    #[test]
    fn collage_of_constant_functor_composes_crosses_correctly() {
        let chain = Rc::new(chain_poset(1)); // c0 < c1 stand-in: v0 < v1
        let point = Rc::new(terminal_category());
        let pt = point.find_object("pt").unwrap();
        let constant = FinFunctor::new(
            Rc::clone(&chain),
            Rc::clone(&point),
            chain.objects().map(|_| pt).collect(),
            chain.morphisms().map(|_| point.id(pt)).collect(),
        )
        .unwrap();
        let col = collage(&constant).unwrap();
        // Objects: 0_v0, 0_v1, 1_pt.
        assert_eq!(col.cat.object_count(), 3);
        let m = col.cat.find_morphism("0_le_v0_v1").unwrap();
        let x0 = col.cross_mor("v0", "id_pt").unwrap();
        let x1 = col.cross_mor("v1", "id_pt").unwrap();
        assert_eq!(col.cat.compose(x1, m), Some(x0), "x1 . m = x0");
        assert_eq!(col.canonical_lift(chain.find_object("v0").unwrap()), x0);
        // Projection sends crosses over the base arrow.
        let le = col.base.find_morphism("le_v0_v1").unwrap();
        assert_eq!(col.projection.apply_mor(x0), le);
    }

    #[test]
    fn collage_of_identity_on_walking_arrow_has_expected_size() {
        let c = Rc::new(walking_arrow());
        let col = collage(&FinFunctor::identity(&c)).unwrap();
        // Objects: 0_a, 0_b, 1_a, 1_b.  Morphisms: 4 identities, 0_f, 1_f,
        // crosses: a with phi from a (id_a, f) and b with phi from b (id_b):
        // x_a_id_a, x_a_f, x_b_id_b.
        assert_eq!(col.cat.object_count(), 4);
        assert_eq!(col.cat.mor_count(), 4 + 2 + 3);
    }
}
