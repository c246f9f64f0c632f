//! Solvers for quintic equations in trinomial form.
//!
//! Two independent methods cover `x^5 + x + a = 0` (and the Bring-Jerrard,
//! `(z^5+z^4)/2 = lambda` and `(y^5+u y^4)/2 = xi` shapes it reduces to):
//!
//! * [`radical`] — a fixed-point iteration whose map is built entirely from
//!   fourth and fifth roots. One application from the standard starting
//!   point is a closed-form radical expression within 4.32e-3 of a root
//!   (2.51e-2 relative), and each further step shrinks the error by better
//!   than 15x. Yields one root.
//! * [`trig`] — a trigonometric bisection on the root-argument equation
//!   that recovers all five roots, with the fifth reconstructed from the
//!   degree-4 coefficient when the rotation angle sits on an endpoint.
//!
//! [`oracle`] is a deliberately separate simultaneous-iteration solver used
//! by tests and the CLI's verify mode as ground truth; it shares no code
//! path with the two methods above.
//!
//! Every n-th root in the crate uses the branch with argument in
//! `[-pi/n, pi/n)` ([`branch`]), and residuals are the universal
//! correctness certificate throughout.

pub mod branch;
pub mod error;
pub mod oracle;
pub mod radical;
pub mod reductions;
pub mod trig;

pub use branch::{branch_nth_root, rational_power};
pub use error::{Error, Result};
pub use radical::{
    bring_radical, bring_radical_formula, naive_iteration, radical_formula, radical_step,
    solve_form1, solve_form2, solve_form3, starting_point, AlgorithmConstants, IterationTrace,
    RootEstimate, CONSTANTS, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
pub use reductions::{
    bring_jerrard_to_form1, form1_to_form2, form2_to_form3, form3_root_to_form1_root,
    BringJerrardProblem, BringJerrardReduction, Form1Problem, Form2Problem, Form3Problem,
};
pub use trig::{
    all_roots_form1, all_roots_form2, all_roots_form3, angle_equation, bisect_angle, intervals_for,
    radius_at, AngularInterval, IntervalEnd, RootProvenance, RootRecord, RootSet,
};
