//! Jones-Wenzl projectors of types A, B and D.
//!
//! Smaller projectors always sit on the leftmost strands; the new strand of
//! each recursion step is appended on the right.

mod verify;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

pub use verify::{
    check_projector, projector_image, recursion_identities, structural_identities,
    verify_characterization, ProjectorImage,
};

use crate::error::{Error, Result};
use crate::qfield::{qint, rat, signed, RatFunc};
use crate::rep::{psi, LinOp};
use crate::tldiag::{gen_s0, gen_u, gen_u0, identity, TLMorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectorKind {
    A,
    BPlus,
    BMinus,
    D,
}

impl ProjectorKind {
    /// +1 for BPlus, -1 for BMinus.
    pub fn eta(self) -> Option<i32> {
        match self {
            ProjectorKind::BPlus => Some(1),
            ProjectorKind::BMinus => Some(-1),
            _ => None,
        }
    }

    pub fn b(eta: i32) -> Self {
        if eta > 0 {
            ProjectorKind::BPlus
        } else {
            ProjectorKind::BMinus
        }
    }
}

impl fmt::Display for ProjectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjectorKind::A => "a",
            ProjectorKind::BPlus => "b+",
            ProjectorKind::BMinus => "b-",
            ProjectorKind::D => "d",
        })
    }
}

impl FromStr for ProjectorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(ProjectorKind::A),
            "b+" | "bplus" => Ok(ProjectorKind::BPlus),
            "b-" | "bminus" => Ok(ProjectorKind::BMinus),
            "d" => Ok(ProjectorKind::D),
            _ => Err(Error::Domain(format!("unknown projector kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Jw(ProjectorKind, usize, i32),
    DRecursive(usize, i32),
}

type Cache<T> = OnceLock<Mutex<HashMap<Key, Arc<T>>>>;

static MORPHISMS: Cache<TLMorphism> = OnceLock::new();
static IMAGES: Cache<LinOp> = OnceLock::new();

/// Looks up `key`, computing outside the lock on a miss; concurrent fills of
/// the same key store equal values.
fn memo<T>(cache: &'static Cache<T>, key: Key, compute: impl FnOnce() -> T) -> Arc<T> {
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    map.lock().expect("cache lock").entry(key).or_insert(v).clone()
}

fn check_args(n: usize, eps: i32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("projectors need n >= 1".into()));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::Domain(format!("eps must be 1 or -1, got {eps}")));
    }
    Ok(())
}

/// X + c · X U_n X with X = p ⊗ id, p on n strands.
fn recursion_step(p: &TLMorphism, c: &RatFunc) -> TLMorphism {
    let n = p.source();
    let x = p.tensor_right_identity(1);
    let u = gen_u(n, n + 1, p.eps()).expect("U_n exists on n+1 strands");
    let xux = &(&x * &u) * &x;
    &x + &xux.scale(c)
}

/// eps [n]/[n+1].
fn type_a_coefficient(n: usize, eps: i32) -> RatFunc {
    signed(eps, &(&qint(n as i64) / &qint(n as i64 + 1)))
}

/// eps (q^(n-1) + q^-(n-1)) / (q^n + q^-n).
pub fn type_b_coefficient(n: usize, eps: i32) -> RatFunc {
    let n = n as i64;
    signed(eps, &(&RatFunc::q_sym(n - 1) / &RatFunc::q_sym(n)))
}

/// The projector of the given kind on n strands.
pub fn jw(kind: ProjectorKind, n: usize, eps: i32) -> Result<Arc<TLMorphism>> {
    check_args(n, eps)?;
    Ok(jw_unchecked(kind, n, eps))
}

fn jw_unchecked(kind: ProjectorKind, n: usize, eps: i32) -> Arc<TLMorphism> {
    memo(&MORPHISMS, Key::Jw(kind, n, eps), || match kind {
        ProjectorKind::A if n == 1 => identity(1, eps),
        ProjectorKind::A => {
            let prev = jw_unchecked(kind, n - 1, eps);
            recursion_step(&prev, &type_a_coefficient(n - 1, eps))
        }
        ProjectorKind::BPlus | ProjectorKind::BMinus if n == 1 => {
            let half = RatFunc::from_rational(rat(1, 2));
            let s = gen_s0(1, eps).expect("one strand");
            let s = if kind == ProjectorKind::BPlus { s } else { -&s };
            (&identity(1, eps) + &s).scale(&half)
        }
        ProjectorKind::BPlus | ProjectorKind::BMinus => {
            let prev = jw_unchecked(kind, n - 1, eps);
            recursion_step(&prev, &type_b_coefficient(n - 1, eps))
        }
        ProjectorKind::D => {
            let plus = jw_unchecked(ProjectorKind::BPlus, n, eps);
            let minus = jw_unchecked(ProjectorKind::BMinus, n, eps);
            &*plus + &*minus
        }
    })
}

/// The type D projector from its own recursion: d_1 = id,
/// d_2 = id + eps/[2] (U_1 + U_0), then the type B step.
pub fn jw_d_recursive(n: usize, eps: i32) -> Result<Arc<TLMorphism>> {
    check_args(n, eps)?;
    Ok(jw_d_recursive_unchecked(n, eps))
}

fn jw_d_recursive_unchecked(n: usize, eps: i32) -> Arc<TLMorphism> {
    memo(&MORPHISMS, Key::DRecursive(n, eps), || match n {
        1 => identity(1, eps),
        2 => {
            let c = signed(eps, &(&RatFunc::one() / &qint(2)));
            let u = &gen_u(1, 2, eps).expect("U_1") + &gen_u0(2, eps).expect("U_0");
            &identity(2, eps) + &u.scale(&c)
        }
        _ => {
            let prev = jw_d_recursive_unchecked(n - 1, eps);
            recursion_step(&prev, &type_b_coefficient(n - 1, eps))
        }
    })
}

/// Ψ of the projector, memoized.
pub fn jw_image(kind: ProjectorKind, n: usize, eps: i32) -> Result<Arc<LinOp>> {
    let p = jw(kind, n, eps)?;
    Ok(memo(&IMAGES, Key::Jw(kind, n, eps), || psi(&p)))
}

/// Identity on zero strands for n = 0, else `jw(kind, n, eps)`.
pub(crate) fn jw_or_empty(kind: ProjectorKind, n: usize, eps: i32) -> Arc<TLMorphism> {
    if n == 0 {
        Arc::new(identity(0, eps))
    } else {
        jw_unchecked(kind, n, eps)
    }
}

/// Image of `jw_or_empty`.
pub(crate) fn jw_image_or_empty(kind: ProjectorKind, n: usize, eps: i32) -> Arc<LinOp> {
    if n == 0 {
        Arc::new(LinOp::identity(1))
    } else {
        jw_image(kind, n, eps).expect("valid arguments")
    }
}
