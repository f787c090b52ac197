//! The reformulations between 0-1 form, ±1 cut form, QP01, bipartite
//! max-cut, maximum weight biclique and rank-one binary approximation.
//!
//! ```text
//! cargo run --example transformations
//! ```

use bqp::dispatch::{dispatch_solve, Algorithm, SolveOptions};
use bqp::fixtures;
use bqp::graph::BipartiteWeightedGraph;
use bqp::io::{bits, format_cut_instance, format_instance, format_qp01};
use bqp::matrix::ints;
use bqp::rational::int;
use bqp::transform::{
    bqp01_to_cut, bqp01_to_qp01, bqp11h_to_bmaxcut, cut_to_bqp01, mwbp_to_bqp01, qp01_to_bqp01,
    rank1_binary_approx_to_bqp01, to_homogeneous,
};
use bqp::{Instance, Matrix};

fn solve(inst: &Instance) -> bqp::Solution {
    dispatch_solve(inst, Algorithm::Oracle, &SolveOptions::default()).unwrap().solution
}

fn main() {
    let t1 = fixtures::t1();
    println!("== 0-1 form\n{}", format_instance(&t1));

    let (h, big_m) = to_homogeneous(&t1);
    println!("== homogeneous (optimum shifted by {big_m})\n{}", format_instance(&h));
    assert_eq!(solve(&h).value, &solve(&t1).value + &big_m);

    let cut = bqp01_to_cut(&t1);
    println!("== cut form\n{}", format_cut_instance(&cut));
    assert_eq!(cut_to_bqp01(&cut), t1);

    let qp = bqp01_to_qp01(&t1);
    println!("== qp01\n{}", format_qp01(&qp));
    let (back, penalty) = qp01_to_bqp01(&qp);
    let s = solve(&back);
    println!("qp01 embedded back with penalty {penalty}: optimum {}, x = {}, y = {}\n", s.value, bits(&s.x), bits(&s.y));

    let hom = bqp::CutInstance::from_ints(&[[1, -2], [-3, 1]], &[0, 0], &[0, 0], 0).unwrap();
    let g = bqp11h_to_bmaxcut(&hom).unwrap();
    println!("== max-cut edges {:?}", g.edges().iter().map(|(i, j, w)| format!("{i}-{j}:{w}")).collect::<Vec<_>>());

    let graph = BipartiteWeightedGraph::new(3, 3, vec![(0, 0, int(4)), (0, 1, int(2)), (1, 0, int(3)), (1, 1, int(5)), (2, 2, int(6))]).unwrap();
    let (bi, _) = mwbp_to_bqp01(&graph).unwrap();
    let s = solve(&bi);
    println!("== maximum weight biclique {} with rows {} and cols {}", s.value, bits(&s.x), bits(&s.y));

    let hmat = Matrix::from_rows(vec![ints(&[1, 1, 0]), ints(&[1, 1, 0]), ints(&[0, 1, 1])]).unwrap();
    let s = solve(&rank1_binary_approx_to_bqp01(&hmat).unwrap());
    println!("== best rank-one 0-1 approximation u = {}, v = {}, squared error {}", bits(&s.x), bits(&s.y), -s.value);
}
