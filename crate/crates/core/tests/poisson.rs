use dquant::poisson::{
    catalog, catalog_names, catalog_source, from_phi, from_phi_by_power_table, lambda_matrix,
    parse_bracket_file, write_bracket_file, PoissonStructure,
};
use dquant::poly::{parse_poly, Polynomial, VarSet};
use dquant::Error;

fn xy(s: &str) -> Polynomial {
    parse_poly(s, &VarSet::new(vec!["x".into(), "y".into()]).unwrap()).unwrap()
}

fn uv_matrix(rows: [[&str; 2]; 2]) -> Vec<Vec<Polynomial>> {
    let vars = VarSet::new(vec!["u1".into(), "u2".into(), "v1".into(), "v2".into()]).unwrap();
    rows.iter()
        .map(|r| r.iter().map(|s| parse_poly(s, &vars).unwrap()).collect())
        .collect()
}

#[test]
fn every_catalog_entry_is_poisson() {
    for name in catalog_names() {
        let p = catalog(name).unwrap();
        let n = p.dim() as u16;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert!(p.jacobi_residual(a, b, c).is_zero(), "{name} ({a},{b},{c})");
                    for m in 0..n {
                        assert!(p.jacobi_derivative_residual(a, b, c, m).is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn catalog_files_round_trip() {
    for name in catalog_names() {
        let p = parse_bracket_file(catalog_source(name).unwrap()).unwrap();
        assert_eq!(parse_bracket_file(&write_bracket_file(&p)).unwrap(), p, "{name}");
    }
    assert_eq!(catalog("nope"), Err(Error::UnknownCatalog("nope".into())));
}

#[test]
fn linear_bracket_by_hand() {
    let p = catalog("linear-sl2").unwrap();
    let x = |v| Polynomial::var(v);
    assert_eq!(p.x(0, 1), &x(2));
    assert_eq!(p.x(2, 0), &x(1));
    assert!(p.jacobi_residual(0, 1, 2).is_zero());
}

#[test]
fn small_catalog_instances() {
    let p = catalog("constant-sympl-2").unwrap();
    assert_eq!(p.x(0, 1), &Polynomial::one());
    let q = catalog("aij-quadratic").unwrap();
    assert_eq!(q.dim(), 4);
    assert_eq!(q.x(0, 1).to_canonical_string(), "x1*x2");
    assert_eq!(q.entries().count(), 1);
    let g = catalog("gl2-cubic").unwrap();
    assert_eq!(g.x(0, 3).to_canonical_string(), "x1*x2*x3 + x2*x3*x4");
    assert_eq!(g.x(2, 1).to_canonical_string(), "x1*x2*x3 - x2*x3*x4");
}

#[test]
fn printed_u_matrices() {
    let cases = [
        ("x^3", [["u1^2 - u2", "u1*u2"], ["u1*u2", "u2^2"]]),
        ("y", [["v1", "v2"], ["v2", "u1*v2 - u2*v1"]]),
        (
            "y^2",
            [
                ["2*v1*v2 - u1*v1^2", "v2^2 - u2*v1^2"],
                ["v2^2 - u2*v1^2", "u1*v2^2 - 2*u2*v1*v2"],
            ],
        ),
        (
            "x^4",
            [
                ["-u1^3 + 2*u1*u2", "u2^2 - u1^2*u2"],
                ["u2^2 - u1^2*u2", "-u1*u2^2"],
            ],
        ),
    ];
    for (phi, rows) in cases {
        assert_eq!(lambda_matrix(&xy(phi), 2).unwrap(), uv_matrix(rows), "phi = {phi}");
    }
}

#[test]
fn from_phi_is_additive() {
    let a = from_phi(&xy("x^3"), 2).unwrap();
    let b = from_phi(&xy("y"), 2).unwrap();
    let s = from_phi(&xy("x^3 + y"), 2).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(s.x(i, j), &(a.x(i, j) + b.x(i, j)));
        }
    }
}

#[test]
fn from_phi_block_form_and_reductions() {
    for phi in ["x^3", "y^2 + x*y", "x^2*y^2 - 3*y", "x^5"] {
        for d in 1..=3 {
            let p = from_phi(&xy(phi), d).unwrap();
            assert_eq!(p, from_phi_by_power_table(&xy(phi), d).unwrap());
            for i in 0..d as u16 {
                for j in 0..d as u16 {
                    assert!(p.x(i, j).is_zero());
                    assert!(p.x(d as u16 + i, d as u16 + j).is_zero());
                }
            }
        }
    }
    assert!(from_phi(&xy("x"), 0).is_err());
}

#[test]
fn catalog_matches_generator() {
    for (name, phi) in [
        ("phi-x3", "x^3"),
        ("phi-y", "y"),
        ("phi-x3-plus-y", "x^3 + y"),
        ("phi-x4", "x^4"),
        ("phi-y2", "y^2"),
        ("phi-y2-plus-xy", "y^2 + x*y"),
    ] {
        let generated = from_phi(&xy(phi), 2)
            .unwrap()
            .with_vars(VarSet::default_names(4))
            .unwrap()
            .with_name(name);
        assert_eq!(catalog(name).unwrap(), generated, "{name}");
    }
}

#[test]
fn broken_bracket_rejected_on_construction() {
    let vars = VarSet::default_names(3);
    let e = |s: &str| parse_poly(s, &vars).unwrap();
    let entries = vec![(0, 1, e("x2")), (1, 2, e("x1"))];
    let err = PoissonStructure::new(vars.clone(), entries.clone()).unwrap_err();
    assert_eq!(
        err,
        Error::NotPoisson {
            a: 1,
            b: 2,
            c: 3,
            residual: "-x1".into()
        }
    );
    assert!(PoissonStructure::new_unchecked(vars, entries).is_ok());
}
