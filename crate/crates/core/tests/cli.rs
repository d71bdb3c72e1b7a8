use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fh-blend")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_at_center_node() {
    let o = run(&["eval", "--interval", "-5", "5", "--n", "10", "--d", "0", "--e", "0", "--fn", "runge", "--at", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x,value\n0e0,1e0\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn degree_out_of_range_is_usage_error() {
    let o = run(&["eval", "--n", "4", "--d", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("0 ≤ d ≤ n") && err.contains("d = 9"), "{err}");
    assert!(o.stdout.is_empty());

    let o = run(&["eval", "--n", "10", "--d", "4", "--e", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).lines().count(), 1);
    assert!(stderr(&o).contains("0 ≤ e ≤ d"));
}

#[test]
fn unknown_flag_and_missing_file() {
    let o = run(&["scan", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).lines().count(), 1);

    let o = run(&["eval", "--fn", "pp:/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn scan_is_rectangular_with_na_cells() {
    let o = run(&["scan", "--n", "6", "--dmax", "3", "--emax", "3", "--grid", "200"]);
    assert!(o.status.success() && o.stderr.is_empty());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 16);
    for r in &rows {
        assert_eq!(r.len(), 9);
        let (d, e): (usize, usize) = (r[2].parse().unwrap(), r[3].parse().unwrap());
        assert_eq!(r[4] == "NA", e > d, "{r:?}");
    }
}

#[test]
fn repeated_noisy_runs_are_byte_identical() {
    let args = [
        "converge", "--configs", "ext:6,2", "fh:3", "spline", "--nmin", "8", "--nmax", "20", "--grid", "500",
        "--sigma", "1e-8", "--seed", "9", "--interval", "-3", "7",
    ];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.ends_with(",9,1e-8") || l.starts_with("method")));
}

#[test]
fn out_file_and_polynomial_reproduction() {
    let dir = std::env::temp_dir().join(format!("fh-blend-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("conv.csv");
    let o = run(&[
        "converge", "--configs", "ext:5,2", "--nmin", "10", "--nmax", "10", "--fn", "poly:1,-2,0.5,3",
        "--interval", "-1", "1", "--grid", "300", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty() && o.stderr.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let linf: f64 = text.lines().nth(1).unwrap().split(',').nth(4).unwrap().parse().unwrap();
    assert!(linf < 1e-12, "{linf}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn lebesgue_and_table_commands() {
    let o = run(&["lebesgue", "--n", "16", "--d", "8", "--e", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lambda: f64 = text.lines().nth(1).unwrap().split(',').nth(6).unwrap().parse().unwrap();
    assert!(lambda > 1.0 && lambda < 10.0);

    let o = run(&["table1", "--grid", "1000"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
}
