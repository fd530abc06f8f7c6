//! Words in the generators e_a, t_a, m_{r,s}, j and their reduction to the
//! normal form e_{a(k)} .. e_{a(1)} m_{r,s} in which a zero argument can only
//! appear at the two ends.
//!
//! Reduction moves: t_a = e_0 e_a, j = e_0, e_a e_0 e_b = e_{a+b},
//! e_0 e_0 = 1, and m_{r,s} e_a = e_{s a r^{-1}} m_{s,r}.

use crate::ctx::Pe2Ctx;
use crate::ordval::OrdValue;
use ring_core::{Ring, RingElement, RingError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// e_a = j t_a
    E(RingElement),
    /// translation t_a
    T(RingElement),
    /// diagonal multiplier m_{r,s}; both entries must be units
    M(RingElement, RingElement),
    /// the swap
    J,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWord {
    ring: Ring,
    gens: Vec<Generator>,
}

impl GroupWord {
    pub fn new(ring: &Ring, gens: Vec<Generator>) -> ring_core::Result<Self> {
        for g in &gens {
            match g {
                Generator::E(a) | Generator::T(a) => {
                    if a.ring() != ring {
                        return Err(RingError::Mismatch(ring.to_string(), a.ring().to_string()));
                    }
                }
                Generator::M(r, s) => {
                    if r.ring() != ring || s.ring() != ring {
                        return Err(RingError::Mismatch(ring.to_string(), r.ring().to_string()));
                    }
                    if !r.is_unit() || !s.is_unit() {
                        return Err(RingError::NotSupported(
                            "m generator requires two-sided invertible payloads".into(),
                        ));
                    }
                }
                Generator::J => {}
            }
        }
        Ok(GroupWord { ring: ring.clone(), gens })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// The product of the generator matrices in written order, reduced to its
    /// projective class representative.
    pub fn as_matrix(&self, ctx: &Pe2Ctx) -> RingElement {
        ctx.canon(&self.raw_matrix(ctx)).rep
    }

    /// The plain matrix product, not reduced projectively.
    pub fn raw_matrix(&self, ctx: &Pe2Ctx) -> RingElement {
        let mut acc = RingElement::one(ctx.mat2());
        for g in &self.gens {
            let m = match g {
                Generator::E(a) => ctx.e(a),
                Generator::T(a) => ctx.t(a),
                Generator::M(r, s) => ctx.m(r, s).expect("validated at construction"),
                Generator::J => ctx.j(),
            };
            acc = &acc * &m;
        }
        acc
    }
}

/// Normal form e_{args[0]} e_{args[1]} .. e_{args[k-1]} m_{r,s}: `args` in
/// written order, so args[0] is a(k) and args[k-1] is a(1); interior entries
/// are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub args: Vec<RingElement>,
    pub r: RingElement,
    pub s: RingElement,
}

impl NormalForm {
    pub fn k(&self) -> usize {
        self.args.len()
    }

    /// Rebuild as a word.
    pub fn to_word(&self, ring: &Ring) -> GroupWord {
        let mut gens: Vec<Generator> = self.args.iter().cloned().map(Generator::E).collect();
        if !(self.r.is_one() && self.s.is_one()) {
            gens.push(Generator::M(self.r.clone(), self.s.clone()));
        }
        GroupWord::new(ring, gens).unwrap()
    }

    /// The length contribution of this representation: with k letters and
    /// zeros flagged at the left end (a(k)) and right end (a(1)),
    ///   k = 0                 -> 0
    ///   k = 1, a(1) = 0       -> 1-
    ///   k > 1, both ends zero -> k - 2
    ///   a(k) = 0, a(1) != 0   -> k - 3/2
    ///   a(k) != 0, a(1) = 0   -> k-
    ///   both nonzero          -> k
    pub fn ord_value(&self) -> OrdValue {
        let k = self.args.len() as u32;
        if k == 0 {
            return OrdValue::ZERO;
        }
        let left_zero = self.args.first().unwrap().is_zero();
        let right_zero = self.args.last().unwrap().is_zero();
        match (left_zero, right_zero) {
            _ if k == 1 => {
                if left_zero {
                    OrdValue::minus(1)
                } else {
                    OrdValue::int(1)
                }
            }
            (true, true) => OrdValue::int(k - 2),
            (true, false) => OrdValue::half_above(k - 2), // k - 3/2
            (false, true) => OrdValue::minus(k),
            (false, false) => OrdValue::int(k),
        }
    }
}

/// Push one e-letter onto the normal-form stack, collapsing interior zeros.
fn push_letter(args: &mut Vec<RingElement>, c: RingElement) {
    if let Some(top) = args.last() {
        if top.is_zero() {
            if args.len() >= 2 {
                args.pop();
                let x = args.pop().unwrap();
                push_letter(args, &x + &c);
                return;
            }
            if c.is_zero() {
                args.pop(); // e_0 e_0 = 1
                return;
            }
        }
    }
    args.push(c);
}

/// Reduce a word to normal form. The projective class is preserved; this is
/// asserted on every call in test builds.
pub fn normalize(ctx: &Pe2Ctx, word: &GroupWord) -> NormalForm {
    let one = RingElement::one(ctx.base());
    let zero = RingElement::zero(ctx.base());
    let mut args: Vec<RingElement> = Vec::new();
    let mut r = one.clone();
    let mut s = one.clone();
    // append e_b on the right of (args) m_{r,s} using m_{r,s} e_b = e_{s b r^{-1}} m_{s,r}
    let push_e = |args: &mut Vec<RingElement>, r: &mut RingElement, s: &mut RingElement, b: &RingElement| {
        let rinv = r.try_invert().expect("multiplier payloads stay invertible");
        let conj = &(&*s * b) * &rinv;
        push_letter(args, conj);
        std::mem::swap(r, s);
    };
    for g in word.generators() {
        match g {
            Generator::E(a) => push_e(&mut args, &mut r, &mut s, a),
            Generator::J => push_e(&mut args, &mut r, &mut s, &zero),
            Generator::T(a) => {
                // t_a = e_0 e_a
                push_e(&mut args, &mut r, &mut s, &zero);
                push_e(&mut args, &mut r, &mut s, a);
            }
            Generator::M(r2, s2) => {
                r = &r * r2;
                s = &s * s2;
            }
        }
    }
    let nf = NormalForm { args, r, s };
    debug_assert!(
        ctx.proj_eq(&nf.to_word(ctx.base()).raw_matrix(ctx), &word.raw_matrix(ctx)),
        "normalize changed the projective class"
    );
    nf
}

/// Normalize and check (in all builds) that the projective class is intact.
pub fn normalize_checked(ctx: &Pe2Ctx, word: &GroupWord) -> ring_core::Result<NormalForm> {
    let nf = normalize(ctx, word);
    if ctx.proj_eq(&nf.to_word(ctx.base()).raw_matrix(ctx), &word.raw_matrix(ctx)) {
        Ok(nf)
    } else {
        Err(RingError::NotSupported("normalization altered the class".into()))
    }
}

/// The Ord contribution of a word's normal form.
pub fn ord_of_word(ctx: &Pe2Ctx, word: &GroupWord) -> OrdValue {
    normalize(ctx, word).ord_value()
}
