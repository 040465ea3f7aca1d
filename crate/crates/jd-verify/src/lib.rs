//! Verification suites. Each suite rebuilds an identity or structure result
//! at small genus and degree and compares against an independently computed
//! expectation; [`run_suite`] returns a deterministic [`Report`].

pub mod ctx;
pub mod error;
pub mod report;
pub mod suites;

use std::time::Instant;

pub use ctx::{Cost, Ctx};
pub use error::VerifyError;
pub use report::{Case, Params, Report, Status, DEFAULT_SEED, FORMAT_VERSION};

use suites::{lie, operators, structure};

type SuiteFn = fn(&Ctx) -> Vec<Case>;

pub struct Suite {
    pub id: &'static str,
    pub about: &'static str,
    run: SuiteFn,
}

pub const SUITES: &[Suite] = &[
    Suite { id: "delta_welldef", about: "δ kills every relator of A^Y_n (n ≤ 3)", run: operators::delta_welldef },
    Suite { id: "delta_Delta", about: "δ′∘Δ = δ″∘Δ = 0 on connected generators of i-degree ≤ 2", run: operators::delta_doubling },
    Suite { id: "jacobi_Dvv", about: "∑_v D_vv = 0", run: operators::jacobi_dvv },
    Suite { id: "kirchhoff", about: "∑_w D_vw = 0 at every leg", run: operators::kirchhoff },
    Suite { id: "leibniz", about: "δ(x⋆y) = δx⋆y + x⋆δy and the per-color identities", run: operators::leibniz },
    Suite { id: "oneloop_phi", about: "(H^⊗n)_D2n → A^c_{n,1} is an isomorphism", run: structure::oneloop_phi },
    Suite { id: "oneloop_rank", about: "necklace counts, rank and torsion of A^c_{n,1}", run: structure::oneloop_rank },
    Suite { id: "periodic_iso", about: "doubling w ↦ ww on one-loop modules", run: structure::periodic_iso_suite },
    Suite { id: "quasilie_exact", about: "quasi-Lie sequences, γ in odd degree, tree torsion", run: lie::quasilie_exact },
    Suite { id: "eta_iso", about: "η′: A^c_{n,0} ≅ D′_n", run: lie::eta_iso },
    Suite { id: "sq_xi", about: "δ″∘sq = ξ modulo 2", run: lie::sq_xi },
    Suite { id: "nu_inj", about: "ν is injective and kills θ", run: lie::nu_inj },
    Suite { id: "periodic_inclusion", about: "H⊗Z/2 ≅ A^c,s,period_{2,1}⊗Z/2 through δ″∘sq̄", run: structure::periodic_inclusion },
    Suite { id: "tree_kernel", about: "Ker((id⊗½)δ on tor A^c_{2k−1,0}) = Im Δ_{k−1,0}", run: lie::tree_kernel },
    Suite { id: "y3_structure", about: "j is injective; A^c_3 / im j ≅ (L₃⊕S²H)⊗Z/2 ⊕ D₃ ⊕ Λ³H", run: structure::y3_structure },
    Suite { id: "remark_bc", about: "δ″δ′T(a,b,c) = O(a,b,c)", run: operators::remark_bc },
];

pub fn suite(id: &str) -> Result<&'static Suite, VerifyError> {
    SUITES.iter().find(|s| s.id == id).ok_or_else(|| VerifyError::UnknownSuite(id.to_string()))
}

pub fn run_suite(id: &str, params: &Params) -> Result<Report, VerifyError> {
    let s = suite(id)?;
    if params.genus == Some(0) {
        return Err(VerifyError::Params { suite: id.into(), reason: "genus must be at least 1".into() });
    }
    let start = Instant::now();
    let cases = (s.run)(&Ctx { params });
    let wall = params.timed.then(|| start.elapsed().as_millis() as u64);
    Ok(Report::new(s.id, params, cases, wall))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_unique() {
        assert_eq!(SUITES.len(), 16);
        let mut ids: Vec<_> = SUITES.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 16);
        assert!(matches!(run_suite("nope", &Params::default()), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn caps_mark_cases_skipped() {
        let p = Params { max_ideg: Some(2), ..Params::genus(1) };
        let r = run_suite("oneloop_phi", &p).unwrap();
        assert!(r.cases.iter().any(|c| c.status == Status::SkippedResource));
        assert!(!r.passed);
    }
}
