//! Runs every example through its `run_example` entry point.

#[allow(dead_code)]
#[path = "../examples/smith_normal_form.rs"]
mod smith_normal_form;

#[allow(dead_code)]
#[path = "../examples/weyl_groups.rs"]
mod weyl_groups;

#[allow(dead_code)]
#[path = "../examples/twisted_cohomology.rs"]
mod twisted_cohomology;

#[allow(dead_code)]
#[path = "../examples/elliptic_tables.rs"]
mod elliptic_tables;

#[allow(dead_code)]
#[path = "../examples/torus_fixed_points.rs"]
mod torus_fixed_points;

#[allow(dead_code)]
#[path = "../examples/fixed_locus.rs"]
mod fixed_locus;

#[allow(dead_code)]
#[path = "../examples/pseudo_real.rs"]
mod pseudo_real;

fn check(out: &str, needles: &[&str]) {
    for n in needles {
        assert!(out.contains(n), "missing {n:?} in\n{out}");
    }
}

#[test]
fn smith_normal_form_runs() {
    check(&smith_normal_form::run_example().unwrap(), &["D = [[1,0],[0,6]]", "free rank 1, torsion [2]", "solvable: false"]);
}

#[test]
fn weyl_groups_runs() {
    check(&weyl_groups::run_example().unwrap(), &["|W| = 6 ", "|W| = 12 ", "|W| = 192"]);
}

#[test]
fn twisted_cohomology_runs() {
    check(&twisted_cohomology::run_example().unwrap(), &["A2.sc with sigma = flip: 3 twisted classes", "|Upsilon| = 2"]);
}

#[test]
fn elliptic_tables_runs() {
    check(&elliptic_tables::run_example().unwrap(), &["region E", "(computed)"]);
}

#[test]
fn torus_fixed_points_runs() {
    check(&torus_fixed_points::run_example().unwrap(), &["(-z1, 1/z2)                    empty", "nonempty if"]);
}

#[test]
fn fixed_locus_runs() {
    check(&fixed_locus::run_example().unwrap(), &["side             higgs", "(A,B,A)"]);
}

#[test]
fn pseudo_real_runs() {
    check(&pseudo_real::run_example().unwrap(), &["H^1 shifted by omega_z is empty", "omega_z = [[-1,0],[0,-1]]"]);
}
