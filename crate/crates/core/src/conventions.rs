//! Sign and ordering conventions shared by the symbolic and numerical layers.
//!
//! * Vector fields: `[ξ, η]^i = Σ_j (ξ^j ∂_j η^i − η^j ∂_j ξ^i)`, and the cochain
//!   differential is `(dc)(ξ, η) = −c([ξ, η])` on one-cochains.
//! * Gelfand–Kazhdan form: `ω(τ) = −j_0 (d/dt)(k_0^{-1} ∘ k_t)`, so `ω = −dx_0/x_1 + …`
//!   and `ω_r(X̃) = −∂^r X/∂x^r (0)` in the chart of the frame ([`GK_SIGN`]).
//! * Diffeomorphism groups act on the right: `g_1 g_2 = g_2 ∘ g_1`
//!   ([`group_product`]). Composite arguments `ḡ_i = g_i ∘ … ∘ g_1` are therefore the
//!   products `g_1 ⋯ g_i`.
//! * Group cochains: `(δc)(g_1,…,g_{p+1}) = c(g_2,…,g_{p+1})
//!   + Σ_{i=1}^p (−1)^i c(…, g_i g_{i+1}, …) + (−1)^{p+1} c(g_1,…,g_p)`, with the
//!   trivial action on `ℝ`.

/// Sign in front of the jet derivative in the Gelfand–Kazhdan form.
pub const GK_SIGN: i64 = -1;

/// Orders the factors of `g_1 g_2` for application: `g_1` acts first, then `g_2`.
pub fn group_product<T>(g1: T, g2: T) -> [T; 2] {
    [g1, g2]
}

/// Sign of the `i`-th face term `c(…, g_i g_{i+1}, …)` of the group coboundary.
pub fn face_sign(i: usize) -> f64 {
    if i.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
