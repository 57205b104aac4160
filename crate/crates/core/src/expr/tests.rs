use super::*;

fn alg(n: usize, ell: u32) -> Algebra {
    Algebra::symbolic(n, ell).unwrap()
}

#[test]
fn precedence_and_associativity() {
    let e = parse("x1*x2 - x2*x1").unwrap();
    let x = |i| Box::new(Expr::Atom(Atom::X(i)));
    assert_eq!(
        e,
        Expr::Sub(
            Box::new(Expr::Mul(x(1), x(2))),
            Box::new(Expr::Mul(x(2), x(1)))
        )
    );
    let e = parse("a").unwrap_err();
    assert_eq!(e.position, 0);
    // left associativity of binary minus: 1 - 2 - 3 = -4
    let a = alg(3, 2);
    assert_eq!(
        parse_hecke(&a, "1 - 2 - 3").unwrap(),
        HeckeElem::scalar(&a, a.deformation().integer(-4))
    );
    // ^ binds tighter than unary minus
    assert_eq!(
        parse_hecke(&a, "-x1^2").unwrap(),
        -&parse_hecke(&a, "x1*x1").unwrap()
    );
    assert_eq!(parse("2^3*x1").unwrap(), parse("(2^3)*x1").unwrap());
}

#[test]
fn negative_exponent_on_y() {
    let e = parse("y2^-1 * g1").unwrap();
    assert_eq!(
        e,
        Expr::Mul(
            Box::new(Expr::Pow(Box::new(Expr::Atom(Atom::Y(2))), -1)),
            Box::new(Expr::Atom(Atom::G(1)))
        )
    );
}

#[test]
fn negative_exponent_on_x_is_rejected() {
    let err = parse("x1^-1").unwrap_err();
    assert_eq!(err.position, 3);
    assert!(err.found.contains("x1"), "{err}");
    assert!(parse("t2^-3").is_err());
}

#[test]
fn syntax_errors_report_position_and_expectation() {
    let err = parse("x1 x2").unwrap_err();
    assert_eq!(err.position, 3);
    assert!(err.expected.contains("'*'"));
    let err = parse("(x1 + x2").unwrap_err();
    assert_eq!(err.position, 8);
    assert_eq!(err.found, "end of input");
    let err = parse("x1 + ").unwrap_err();
    assert_eq!(err.position, 5);
    assert!(parse("x1 # x2").unwrap_err().position == 3);
    assert!(parse("1/0").is_err());
    assert!(parse("x1^").is_err());
}

#[test]
fn evaluation_examples() {
    let a = alg(3, 2);
    let rhs = &(&a.x(1).unwrap() * &a.x(2).unwrap())
        - &(&HeckeElem::scalar(&a, a.t(1).clone()) * &a.g(1).unwrap());
    assert_eq!(parse_hecke(&a, "x2*x1").unwrap(), rhs);
    assert!(parse_hecke(&a, "0*x1").unwrap().is_zero());
    let a = alg(3, 3);
    assert_eq!(
        parse_laurent(&a, "g1*y1").unwrap().to_string(),
        "zeta*y1*g1"
    );
    assert_eq!(
        parse_hecke(&a, "x_2 * x_1").unwrap(),
        parse_hecke(&a, "x2*x1").unwrap()
    );
}

#[test]
fn atoms_are_checked_against_the_target() {
    let a = alg(3, 2);
    assert!(matches!(
        parse_hecke(&a, "y1"),
        Err(ExprError::Eval(EvalError::InvalidAtom {
            atom: Atom::Y(1),
            ..
        }))
    ));
    assert!(matches!(
        parse_laurent(&a, "x1"),
        Err(ExprError::Eval(EvalError::InvalidAtom {
            atom: Atom::X(1),
            ..
        }))
    ));
    assert!(matches!(
        parse_hecke(&a, "x4"),
        Err(ExprError::Eval(EvalError::IndexOutOfRange { .. }))
    ));
    assert!(parse_hecke(&a, "g3").is_ok());
    assert!(parse_hecke(&a, "(x1 + 1)^-1").is_err());
    assert!(parse_scalar(a.field(), "t1").is_err());
}

#[test]
fn group_inverses() {
    for (n, ell) in [(3, 2), (4, 3), (5, 4)] {
        let a = alg(n, ell);
        for i in 1..=n {
            let g = a.g(i).unwrap();
            let inv = parse_hecke(&a, &format!("g{i}^-1")).unwrap();
            assert_eq!(&g * &inv, HeckeElem::one(&a));
            assert_eq!(&inv * &g, HeckeElem::one(&a));
            let pow = parse_hecke(&a, &format!("g{i}^-{ell}")).unwrap();
            assert_eq!(&pow * &g.pow(ell), HeckeElem::one(&a));
            let lm =
                parse_laurent(&a, &format!("(3*zeta*y1^2*g{i})^-1 * 3*zeta*y1^2*g{i}")).unwrap();
            assert_eq!(lm, LaurentElem::one(&a));
        }
    }
}

#[test]
fn scalars() {
    let f = CyclotomicField::new(3).unwrap();
    assert_eq!(parse_scalar(&f, "zeta^3").unwrap(), f.one());
    assert_eq!(parse_scalar(&f, "1 + zeta + zeta^2").unwrap(), f.zero());
    assert_eq!(parse_scalar(&f, "zeta^-1").unwrap(), f.zeta_power(2));
    assert_eq!(
        parse_scalar(&f, "-(2/3)").unwrap(),
        f.from_rational(Rational::new((-2).into(), 3.into()))
    );
}

#[test]
fn renderings_parse_back() {
    let a = alg(4, 3);
    let samples = [
        a.w(),
        a.evaluate_f(),
        &a.x(4).unwrap() * &a.x(1).unwrap(),
        a.x(2).unwrap().pow(3).scale(&a.tau(3).unwrap()),
        &(&a.g(2).unwrap() * &a.g(4).unwrap()) * &a.x(3).unwrap(),
    ];
    for s in samples {
        let text = s.to_string();
        assert_eq!(parse_hecke(&a, &text).unwrap(), s, "{text}");
    }
    let l = a.theta(&a.w());
    assert_eq!(parse_laurent(&a, &l.to_string()).unwrap(), l);
    let l = a.theta(&a.x(4).unwrap().pow(2));
    assert_eq!(parse_laurent(&a, &l.to_string()).unwrap(), l);
}
