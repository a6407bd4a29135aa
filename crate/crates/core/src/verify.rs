//! Bundled verification suites: each item carries the expected and the
//! computed value as text so reports can be compared by eye or by machine.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::constants::{constants_basis, verify_hilbert_product};
use crate::monomial::{Flavor, Monomial, MultiDegree};
use crate::ode::{
    check_exponential, fit_constants, homogeneous_general_solution, nonassoc_exponential, solve_linear_ode,
    LinearODE, RootData, TruncatedElement,
};
use crate::polynomial::{q, qf, Polynomial};
use crate::rep::{constants_decomposition, Method};
use crate::series::catalan;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hilbert,
    Decompositions,
    Ode,
    Exp,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hilbert" => Ok(Suite::Hilbert),
            "decompositions" => Ok(Suite::Decompositions),
            "ode" => Ok(Suite::Ode),
            "exp" => Ok(Suite::Exp),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub suite: &'static str,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckItem {
    fn new(suite: &'static str, name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        CheckItem {
            suite,
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.pass,
        })
    }
}

impl fmt::Display for CheckItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {}/{}: expected {}, computed {}",
            self.suite, self.name, self.expected, self.computed
        )
    }
}

pub fn run_suite(suite: Suite) -> Vec<CheckItem> {
    match suite {
        Suite::Hilbert => hilbert(),
        Suite::Decompositions => decompositions(),
        Suite::Ode => ode(),
        Suite::Exp => exp(),
        Suite::All => [hilbert(), decompositions(), ode(), exp()].concat(),
    }
}

fn hilbert() -> Vec<CheckItem> {
    let c = catalan(8);
    let mut items = Vec::new();
    let mut partial = 0usize;
    for (n, cn) in c.iter().enumerate() {
        partial += constants_basis(&MultiDegree::single(n), Flavor::Magma).len();
        items.push(CheckItem::new("hilbert", format!("c_{n} = sum gamma_j"), cn, partial));
    }
    for flavor in Flavor::ALL {
        let report = verify_hilbert_product(flavor, 2, 5);
        let bad: Vec<String> = report
            .rows
            .iter()
            .filter(|r| !r.pass())
            .map(|r| r.multidegree.to_string())
            .collect();
        items.push(CheckItem::new(
            "hilbert",
            format!("{flavor} product identity, m=2, degree<=5 ({} multidegrees)", report.rows.len()),
            "no mismatches",
            if bad.is_empty() { "no mismatches".to_string() } else { bad.join(" ") },
        ));
    }
    items
}

fn decompositions() -> Vec<CheckItem> {
    let table = [
        (Flavor::Magma, 2, "[1,1]"),
        (Flavor::Magma, 3, "[3] + 3[2,1] + [1,1,1]"),
        (Flavor::Magma, 4, "3[4] + 10[3,1] + 7[2,2] + 10[2,1,1] + 4[1,1,1,1]"),
        (Flavor::Commutative, 2, "0"),
        (Flavor::Commutative, 3, "[2,1]"),
        (Flavor::Commutative, 4, "[4] + [3,1] + [2,2]"),
    ];
    let mut items = Vec::new();
    for (flavor, k, expected) in table {
        for (method, label) in [(Method::Kernel, "kernel"), (Method::Recursion, "recursion")] {
            let computed = match constants_decomposition(k, flavor, method) {
                Ok(d) => d.to_string(),
                Err(e) => format!("error: {e}"),
            };
            items.push(CheckItem::new("decompositions", format!("{flavor} C^({k}) by {label}"), expected, computed));
        }
    }
    items
}

fn scalar(flavor: Flavor, c: i64, order: usize) -> TruncatedElement {
    TruncatedElement::from_polynomial(&Polynomial::constant(flavor, q(c)), order).expect("constant")
}

fn ode() -> Vec<CheckItem> {
    let mut items = Vec::new();
    let order = 10;
    let fl = Flavor::Magma;
    let zero = TruncatedElement::zero(fl, order);

    let exp_ode = LinearODE::new(vec![q(-1)], zero.clone(), vec![scalar(fl, 1, order)]).expect("valid");
    let y = solve_linear_ode(&exp_ode, order).expect("solvable");
    let ones = y.coefficients().iter().all(|c| c.to_polynomial() == Polynomial::one(fl));
    items.push(CheckItem::new("ode", "y' = y, c0 = 1: all c_k = 1", true, ones));
    let residual = exp_ode.residual(&y.materialize()).expect("orders match");
    items.push(CheckItem::new("ode", "y' = y residual", "0", residual.to_polynomial()));

    let cos = LinearODE::new(vec![q(0), q(1)], zero.clone(), vec![scalar(fl, 1, order), zero.clone()]).expect("valid");
    let y = solve_linear_ode(&cos, order).expect("solvable");
    let c: Vec<String> = y.coefficients().iter().map(|c| c.to_polynomial().to_string()).collect();
    items.push(CheckItem::new("ode", "y'' + y = 0 coefficients", "1,0,-1,0,1,0,-1,0,1,0,-1", c.join(",")));

    let x = Monomial::var(1);
    let xx = Monomial::node(x.clone(), x.clone());
    let c0 = &Polynomial::monomial(fl, Monomial::node(x.clone(), xx.clone()))
        - &Polynomial::monomial(fl, Monomial::node(xx, x));
    let rhs = TruncatedElement::from_polynomial(&Polynomial::var(fl, 1), order).expect("one variable");
    let forced = LinearODE::new(
        vec![q(1), qf(-1, 2)],
        rhs,
        vec![TruncatedElement::from_polynomial(&c0, order).expect("one variable"), scalar(fl, 3, order)],
    )
    .expect("valid");
    let y = solve_linear_ode(&forced, order).expect("solvable");
    let residual = forced.residual(&y.materialize()).expect("orders match");
    items.push(CheckItem::new(
        "ode",
        "y'' + y' - y/2 = x with non-scalar c0, residual",
        "0",
        residual.to_polynomial(),
    ));

    let roots = RootData::from_roots(vec![(q(1), 2), (qf(-1, 2), 1)]).expect("consistent");
    let init = vec![
        TruncatedElement::from_polynomial(&c0, order).expect("one variable"),
        scalar(fl, 1, order),
        scalar(fl, -2, order),
    ];
    let hom = LinearODE::new(roots.coefficients().to_vec(), zero, init.clone()).expect("valid");
    let by_recursion = solve_linear_ode(&hom, order).expect("solvable");
    let by_roots = fit_constants(&roots, &init)
        .and_then(|c| homogeneous_general_solution(&roots, &c, order))
        .map(|s| s == by_recursion);
    items.push(CheckItem::new(
        "ode",
        "roots {1:2, -1/2:1}: homogeneous formula equals recursion",
        "true",
        match by_roots {
            Ok(b) => b.to_string(),
            Err(e) => format!("error: {e}"),
        },
    ));
    items
}

fn exp() -> Vec<CheckItem> {
    let e = nonassoc_exponential(8);
    let check = check_exponential(&e).expect("same orders");
    let fl = Flavor::Magma;
    let x = Monomial::var(1);
    let xx = Monomial::node(x.clone(), x.clone());
    let e2 = Polynomial::term(fl, qf(1, 2), xx.clone());
    let e3 = (&Polynomial::monomial(fl, Monomial::node(x.clone(), xx.clone()))
        + &Polynomial::monomial(fl, Monomial::node(xx, x)))
        .scale(&qf(1, 12));
    vec![
        CheckItem::new("exp", "E' - E through degree 7", "0", check.derivative_residual.to_polynomial()),
        CheckItem::new("exp", "E(0)", "1", &check.value_at_zero),
        CheckItem::new("exp", "E*E - E(2x) through degree 8", "0", check.doubling_residual.to_polynomial()),
        CheckItem::new("exp", "e_2", &e2, e.component(2)),
        CheckItem::new("exp", "e_3", &e3, e.component(3)),
    ]
}
