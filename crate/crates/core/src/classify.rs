//! The verdict engine: map descriptors, the reduction rules and derivation
//! traces.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::extrep::{
    signature, sostar_even_verdict, sostar_target_pairing, sp_target_verdict, su_target_pairing,
};
use crate::matrixalg::{inclusion_value, Inclusion};
use crate::pisystem::{canonical_multiset, identify, PiSystem};
use crate::rootsys::{Root, RootSystem};
use crate::tightness::{chain_rule, product_rule, regular_verdict, Status};

/// Which family the image of a representation is placed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetTag {
    Su,
    Sp,
    SoStar,
}

impl TargetTag {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "su" => Ok(TargetTag::Su),
            "sp" => Ok(TargetTag::Sp),
            "so*" | "sostar" => Ok(TargetTag::SoStar),
            _ => Err(Error::Parse(format!("unknown target family '{text}'"))),
        }
    }

    fn algebra(self, p_prime: u32, q_prime: u32) -> AlgebraId {
        match self {
            TargetTag::Su => AlgebraId::Su {
                p: p_prime,
                q: q_prime,
            },
            TargetTag::Sp => AlgebraId::Sp { p: p_prime },
            TargetTag::SoStar => AlgebraId::SoStar { p: p_prime },
        }
    }
}

impl fmt::Display for TargetTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetTag::Su => "su",
            TargetTag::Sp => "sp",
            TargetTag::SoStar => "so*",
        })
    }
}

/// A holomorphic map between Hermitian symmetric spaces, described through
/// its Lie algebra homomorphism.
#[derive(Clone, Debug)]
pub enum MapDescriptor {
    Identity(AlgebraId),
    /// Projection of `factors[0] ⊕ … ⊕ factors[n-1]` onto `factors[index]`.
    Projection {
        factors: Vec<AlgebraId>,
        index: usize,
    },
    RegularInclusion(PiSystem),
    /// The diagonal disc `su(1,1) → target`.
    DiagonalDisc(AlgebraId),
    /// `ι₁: sp(2p) → su(p,p)` or `ι₂: so*(2p) → su(p,p)`.
    DiscInclusion(Inclusion, usize),
    /// `ρₘ` of `su(p,1)`.
    TensorRep {
        p: usize,
        m: usize,
        target: TargetTag,
    },
    /// A spin representation of `so(p,2)`.
    SpinRep {
        p: usize,
        target: TargetTag,
    },
    /// An (H1)-map given as an (H2)-map into a regular subalgebra followed
    /// by the inclusion of that subalgebra.
    Factored {
        h2: Box<MapDescriptor>,
        regular: PiSystem,
    },
    /// Applied left to right.
    Composition(Vec<MapDescriptor>),
    /// A map into the product of the codomains, all with one domain.
    Product(Vec<MapDescriptor>),
}

/// The reduction rules and criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::R7 => "R7",
            Rule::R8 => "R8",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Rule::R1 => "product lemma: a map into a product is tight iff every projection of it is",
            Rule::R2 => "composition lemma: with the outer map injective, a composite is tight iff both maps are; projections are tight",
            Rule::R3 => "factorization lemma: an (H1)-map factors as an (H2)-map into a regular subalgebra",
            Rule::R4 => "tube-type theorem: an (H2)-map between tube-type domains is tight",
            Rule::R5 => "regular subalgebra criterion: tight iff sum of c_i r_i equals the rank",
            Rule::R6 => "diagonal disc theorem: tight iff <rho d Z - d' Z, Z'> = 0",
            Rule::R7 => "spin representations of so(p,2) are (H2) and between tube-type domains",
            Rule::R8 => "skew-symmetric tensor representations of su(p,1): closed-form pairings",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    /// Intermediate values as `(name, value)`; the first is always `map`.
    pub values: Vec<(String, String)>,
}

impl TraceStep {
    fn new(rule: Rule, map: &MapDescriptor) -> Self {
        TraceStep {
            rule,
            values: vec![("map".into(), map.to_string())],
        }
    }

    fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.values.push((key.into(), value.to_string()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    fn single(status: Status, step: TraceStep) -> Self {
        Verdict {
            status,
            trace: vec![step],
        }
    }

    /// The rules fired, in trace order.
    pub fn rules(&self) -> Vec<Rule> {
        self.trace.iter().map(|s| s.rule).collect()
    }
}

/// `p′` and the targets a spin representation of `so(p,2)` lands in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinDescriptor {
    pub p: usize,
    pub p_prime: usize,
    pub targets: Vec<AlgebraId>,
}

/// `p′ = 2^{p/2-1}` for even `p` and `2^{(p-1)/2}` for odd `p`; the image
/// lies in `su(p′,p′)`, and in `sp(2p′)` for `p ≡ 1,2,3 (mod 8)` or
/// `so*(2p′)` for `p ≡ 5,6,7 (mod 8)`.
pub fn spin_descriptor(p: usize) -> SpinDescriptor {
    let p_prime = if p % 2 == 0 {
        1usize << (p / 2).saturating_sub(1)
    } else {
        1usize << ((p - 1) / 2)
    };
    let pp = p_prime as u32;
    let mut targets = vec![AlgebraId::Su { p: pp, q: pp }];
    match p % 8 {
        1..=3 => targets.push(AlgebraId::Sp { p: pp }),
        5..=7 => targets.push(AlgebraId::SoStar { p: pp }),
        _ => {}
    }
    SpinDescriptor {
        p,
        p_prime,
        targets,
    }
}

pub fn tube_type(a: AlgebraId) -> bool {
    a.is_tube_type()
}

fn spin_target(p: usize, target: TargetTag) -> Result<AlgebraId> {
    let d = spin_descriptor(p);
    let pp = d.p_prime as u32;
    let a = target.algebra(pp, pp);
    if !d.targets.contains(&a) {
        return Err(Error::IllTyped(format!(
            "spin representations of so({p},2) do not land in {a}"
        )));
    }
    Ok(a)
}

/// `p ≡ 1 (mod 4)` for sp targets, `p ≡ 3 (mod 4)` for so*, with
/// `m = (p+1)/2`.
fn check_tensor_target(p: usize, m: usize, target: TargetTag) -> Result<()> {
    let residue = match target {
        TargetTag::Su => return Ok(()),
        TargetTag::Sp => 1,
        TargetTag::SoStar => 3,
    };
    if p % 4 != residue || 2 * m != p + 1 {
        return Err(Error::IllTyped(format!(
            "rho_{m} of su({p},1) does not land in a {target} target"
        )));
    }
    Ok(())
}

impl MapDescriptor {
    /// Domain and codomain as lists of simple Hermitian factors.
    pub fn endpoints(&self) -> Result<(Vec<AlgebraId>, Vec<AlgebraId>)> {
        use MapDescriptor::*;
        Ok(match self {
            Identity(a) => (vec![*a], vec![*a]),
            Projection { factors, index } => {
                let target = factors.get(*index).ok_or_else(|| {
                    Error::IllTyped(format!("projection index {index} out of range"))
                })?;
                (factors.clone(), vec![*target])
            }
            RegularInclusion(ps) => (regular_domain(ps)?, vec![ps.ambient()]),
            DiagonalDisc(a) => (vec![AlgebraId::su(1, 1)], vec![*a]),
            DiscInclusion(which, p) => {
                let p32 = *p as u32;
                let source = match which {
                    Inclusion::Iota1 => AlgebraId::Sp { p: p32 },
                    Inclusion::Iota2 => AlgebraId::SoStar { p: p32 },
                };
                (vec![source], vec![AlgebraId::su(p32, p32)])
            }
            TensorRep { p, m, target } => {
                check_tensor_target(*p, *m, *target)?;
                let (pp, qp) = signature(*p, *m)?;
                (
                    vec![AlgebraId::su(*p as u32, 1)],
                    vec![target.algebra(pp as u32, qp as u32)],
                )
            }
            SpinRep { p, target } => (
                vec![AlgebraId::So2 { p: *p as u32 }],
                vec![spin_target(*p, *target)?],
            ),
            Factored { h2, regular } => {
                let (dom, cod) = h2.endpoints()?;
                let sub = regular_domain(regular)?;
                check_chain(&cod, &sub)?;
                (dom, vec![regular.ambient()])
            }
            Composition(maps) => {
                let first = maps
                    .first()
                    .ok_or_else(|| Error::IllTyped("empty composition".into()))?;
                let (dom, mut cod) = first.endpoints()?;
                for m in &maps[1..] {
                    let (d, c) = m.endpoints()?;
                    check_chain(&cod, &d)?;
                    cod = c;
                }
                (dom, cod)
            }
            Product(maps) => {
                let first = maps
                    .first()
                    .ok_or_else(|| Error::IllTyped("empty product".into()))?;
                let (dom, mut cod) = first.endpoints()?;
                for m in &maps[1..] {
                    let (d, c) = m.endpoints()?;
                    check_chain(&dom, &d)?;
                    cod.extend(c);
                }
                (dom, cod)
            }
        })
    }

    /// Whether the homomorphism is injective; only projections (and what is
    /// built from them alone) are not.
    pub fn is_injective(&self) -> bool {
        match self {
            MapDescriptor::Projection { factors, .. } => factors.len() == 1,
            MapDescriptor::Composition(maps) => maps.iter().all(MapDescriptor::is_injective),
            MapDescriptor::Product(maps) => maps.iter().any(MapDescriptor::is_injective),
            _ => true,
        }
    }
}

/// The noncompact factors of a regular subalgebra.
fn regular_domain(ps: &PiSystem) -> Result<Vec<AlgebraId>> {
    let rs = RootSystem::build(ps.ambient())?;
    Ok(identify(&rs, ps)?
        .into_iter()
        .filter_map(|f| f.hermitian)
        .collect())
}

fn check_chain(codomain: &[AlgebraId], domain: &[AlgebraId]) -> Result<()> {
    let a = canonical_multiset(codomain.iter().copied());
    let b = canonical_multiset(domain.iter().copied());
    if a != b {
        return Err(Error::IllTyped(format!(
            "codomain {} does not match domain {}",
            join(codomain),
            join(domain)
        )));
    }
    Ok(())
}

fn join(algebras: &[AlgebraId]) -> String {
    if algebras.is_empty() {
        return "0".into();
    }
    algebras
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for MapDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MapDescriptor::*;
        match self {
            Identity(a) => write!(f, "id {a}"),
            Projection { factors, index } => write!(f, "pi_{index}: {}", join(factors)),
            RegularInclusion(ps) => {
                let roots: Vec<String> = ps.roots().iter().map(Root::to_string).collect();
                write!(f, "regular {{{}}} in {}", roots.join(","), ps.ambient())
            }
            DiagonalDisc(a) => write!(f, "diagonal disc in {a}"),
            DiscInclusion(Inclusion::Iota1, p) => write!(f, "iota1: sp({}) -> su({p},{p})", 2 * p),
            DiscInclusion(Inclusion::Iota2, p) => write!(f, "iota2: so*({}) -> su({p},{p})", 2 * p),
            TensorRep { p, m, target } => write!(f, "rho_{m}: su({p},1) -> {target}"),
            SpinRep { p, target } => write!(f, "spin: so({p},2) -> {target}"),
            Factored { h2, regular } => {
                write!(f, "({h2}) into regular subalgebra of {}", regular.ambient())
            }
            Composition(maps) => {
                let parts: Vec<String> = maps.iter().map(|m| format!("({m})")).collect();
                write!(f, "{}", parts.join(" then "))
            }
            Product(maps) => {
                let parts: Vec<String> = maps.iter().map(|m| format!("({m})")).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

/// Classifies `map`, recording every rule applied.
pub fn classify(map: &MapDescriptor) -> Result<Verdict> {
    map.endpoints()?;
    classify_typed(map)
}

fn classify_typed(map: &MapDescriptor) -> Result<Verdict> {
    use MapDescriptor::*;
    match map {
        Identity(_) => Ok(Verdict::single(
            Status::Tight,
            TraceStep::new(Rule::R2, map).with("links", 0),
        )),
        Projection { .. } => Ok(Verdict::single(
            Status::Tight,
            TraceStep::new(Rule::R2, map).with("projection", "tight"),
        )),
        RegularInclusion(ps) => {
            let rs = RootSystem::build(ps.ambient())?;
            let factors = identify(&rs, ps)?;
            let cert = regular_verdict(&rs, &factors)?;
            let ratios: Vec<String> = cert.ratios.iter().map(|c| c.to_string()).collect();
            let ranks: Vec<String> = cert.ranks.iter().map(|r| r.to_string()).collect();
            Ok(Verdict::single(
                cert.verdict,
                TraceStep::new(Rule::R5, map)
                    .with("ratios", ratios.join(","))
                    .with("ranks", ranks.join(","))
                    .with("weighted_sum", cert.weighted_sum)
                    .with("rank", cert.ambient_rank),
            ))
        }
        DiagonalDisc(_) => Ok(Verdict::single(
            Status::Tight,
            TraceStep::new(Rule::R6, map)
                .with("d", "d'")
                .with("value", 0),
        )),
        DiscInclusion(which, p) => {
            let (dom, cod) = map.endpoints()?;
            if dom[0].is_tube_type() && cod[0].is_tube_type() {
                return Ok(Verdict::single(
                    Status::Tight,
                    TraceStep::new(Rule::R4, map).with("tube_type", "both"),
                ));
            }
            let v = inclusion_value(*which, *p)?;
            Ok(Verdict::single(
                Status::from_bool(v.is_zero()),
                TraceStep::new(Rule::R6, map).with("value", v),
            ))
        }
        TensorRep { p, m, target } => classify_tensor(map, *p, *m, *target),
        SpinRep { p, .. } => {
            let (_, cod) = map.endpoints()?;
            let d = spin_descriptor(*p);
            let both = tube_type(AlgebraId::So2 { p: *p as u32 }) && tube_type(cod[0]);
            if !both {
                return Err(Error::Internal(format!("{} is not of tube type", cod[0])));
            }
            Ok(Verdict {
                status: Status::Tight,
                trace: vec![
                    TraceStep::new(Rule::R7, map)
                        .with("p_prime", d.p_prime)
                        .with("target", cod[0]),
                    TraceStep::new(Rule::R4, map).with("tube_type", "both"),
                ],
            })
        }
        Factored { h2, regular } => {
            let inner = classify_typed(h2)?;
            let outer = classify_typed(&RegularInclusion(regular.clone()))?;
            let status = chain_rule(&[inner.status, outer.status]);
            let mut trace = vec![TraceStep::new(Rule::R3, map)];
            trace.extend(inner.trace);
            trace.extend(outer.trace);
            trace.push(
                TraceStep::new(Rule::R2, map)
                    .with("links", 2)
                    .with("status", status),
            );
            Ok(Verdict { status, trace })
        }
        Composition(maps) => {
            if maps.len() == 1 {
                return classify_typed(&maps[0]);
            }
            let parts = maps
                .iter()
                .map(classify_typed)
                .collect::<Result<Vec<_>>>()?;
            let mut trace: Vec<TraceStep> = parts.iter().flat_map(|v| v.trace.clone()).collect();
            if let Some(i) = maps[1..].iter().position(|m| !m.is_injective()) {
                trace.push(
                    TraceStep::new(Rule::R2, map)
                        .with("non_injective_link", i + 1)
                        .with("status", Status::Unknown),
                );
                return Ok(Verdict {
                    status: Status::Unknown,
                    trace,
                });
            }
            let statuses: Vec<Status> = parts.iter().map(|v| v.status).collect();
            let status = chain_rule(&statuses);
            trace.push(
                TraceStep::new(Rule::R2, map)
                    .with("links", maps.len())
                    .with("status", status),
            );
            Ok(Verdict { status, trace })
        }
        Product(maps) => {
            if maps.len() == 1 {
                return classify_typed(&maps[0]);
            }
            let parts = maps
                .iter()
                .map(classify_typed)
                .collect::<Result<Vec<_>>>()?;
            let statuses: Vec<Status> = parts.iter().map(|v| v.status).collect();
            let status = product_rule(&statuses);
            let mut trace: Vec<TraceStep> = parts.into_iter().flat_map(|v| v.trace).collect();
            trace.push(
                TraceStep::new(Rule::R1, map)
                    .with("factors", maps.len())
                    .with("status", status),
            );
            Ok(Verdict { status, trace })
        }
    }
}

fn classify_tensor(map: &MapDescriptor, p: usize, m: usize, target: TargetTag) -> Result<Verdict> {
    match target {
        TargetTag::Su => {
            let v = su_target_pairing(p, m)?;
            Ok(Verdict::single(
                Status::from_bool(v == 0),
                TraceStep::new(Rule::R8, map).with("su_pairing", v),
            ))
        }
        TargetTag::SoStar => {
            let (pp, _) = signature(p, m)?;
            if pp % 2 == 1 {
                let v = sostar_target_pairing(p)?;
                return Ok(Verdict::single(
                    Status::from_bool(v == 0),
                    TraceStep::new(Rule::R8, map)
                        .with("p_prime", pp)
                        .with("sostar_pairing", v),
                ));
            }
            factorization_verdict(map, sostar_even_verdict(p)?, Inclusion::Iota2)
        }
        TargetTag::Sp => factorization_verdict(map, sp_target_verdict(p)?, Inclusion::Iota1),
    }
}

/// `ρₘ` followed by a tight inclusion into `su(p′,p′)` is not tight, so
/// `ρₘ` is not.
fn factorization_verdict(
    map: &MapDescriptor,
    arg: crate::extrep::FactorizationArgument,
    inclusion: Inclusion,
) -> Result<Verdict> {
    let incl = MapDescriptor::DiscInclusion(inclusion, arg.p_prime);
    let incl_verdict = classify_typed(&incl)?;
    if incl_verdict.status != Status::Tight {
        return Err(Error::Internal(format!("{incl} expected tight")));
    }
    let mut trace = incl_verdict.trace;
    trace.push(
        TraceStep::new(Rule::R8, map)
            .with(
                "composite",
                format!("rho_{} into su({},{})", arg.m, arg.p_prime, arg.p_prime),
            )
            .with("su_pairing", arg.composite_value),
    );
    trace.push(TraceStep::new(Rule::R2, map).with("status", arg.status));
    Ok(Verdict {
        status: arg.status,
        trace,
    })
}

/// Finds a bijection from the simple roots of `inner`'s ambient onto the
/// members of one noncompact factor of `outer` preserving Cartan integers
/// and the noncompact node, and returns the composite Π-system in `outer`'s
/// ambient.
pub fn compose_regular(outer: &PiSystem, inner: &PiSystem) -> Result<PiSystem> {
    let outer_rs = RootSystem::build(outer.ambient())?;
    let inner_rs = RootSystem::build(inner.ambient())?;
    let factors = identify(&outer_rs, outer)?;
    let n = inner_rs.rank();
    let simple: Vec<Root> = (0..n).map(|i| inner_rs.simple_root(i)).collect();
    let cartan = |rs: &RootSystem, a: &Root, b: &Root| -> Result<crate::linalg::Rational> {
        Ok(crate::linalg::int(2) * rs.inner(a, b)? / rs.inner(b, b)?)
    };
    let mut inner_cartan = vec![vec![crate::linalg::Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            inner_cartan[i][j] = cartan(&inner_rs, &simple[i], &simple[j])?;
        }
    }
    let nc = inner_rs.noncompact_index();
    for f in factors
        .iter()
        .filter(|f| f.hermitian.is_some() && f.members.len() == n)
    {
        let mem = &f.members;
        let mut outer_cartan = vec![vec![crate::linalg::Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                outer_cartan[i][j] = cartan(&outer_rs, &mem[i], &mem[j])?;
            }
        }
        let mut assign: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let target_nc = f.noncompact_root.as_ref();
        if search(
            &inner_cartan,
            &outer_cartan,
            mem,
            target_nc,
            nc,
            &mut assign,
            &mut used,
        ) {
            let images: Vec<Root> = mem_image(inner, mem, &assign);
            return PiSystem::new(&outer_rs, images);
        }
    }
    Err(Error::IllTyped(format!(
        "{} is not a factor of the regular subalgebra of {}",
        inner.ambient(),
        outer.ambient()
    )))
}

fn search(
    a: &[Vec<crate::linalg::Rational>],
    b: &[Vec<crate::linalg::Rational>],
    mem: &[Root],
    target_nc: Option<&Root>,
    nc: usize,
    assign: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = assign.len();
    if i == a.len() {
        return true;
    }
    for j in 0..b.len() {
        if used[j] {
            continue;
        }
        if i == nc && target_nc != Some(&mem[j]) {
            continue;
        }
        let consistent = (0..i).all(|k| a[i][k] == b[j][assign[k]] && a[k][i] == b[assign[k]][j]);
        if !consistent {
            continue;
        }
        used[j] = true;
        assign.push(j);
        if search(a, b, mem, target_nc, nc, assign, used) {
            return true;
        }
        assign.pop();
        used[j] = false;
    }
    false
}

fn mem_image(inner: &PiSystem, mem: &[Root], assign: &[usize]) -> Vec<Root> {
    inner
        .roots()
        .iter()
        .map(|r| {
            let mut acc = Root::zero(mem[0].len());
            for (i, &c) in r.coeffs().iter().enumerate() {
                acc = &acc + &mem[assign[i]].scaled(c);
            }
            acc
        })
        .collect()
}
