use poisson_order::cli::execute;

fn main() {
    let input = concat!(env!("CARGO_MANIFEST_DIR"), "/data/sl2.toml");
    for args in [
        vec!["jacobi", "sl2"],
        vec!["core", "sl2", "--point", "0,0,1"],
        vec!["order-core", "M2", "--ideal", "nilpotent"],
        vec!["ivideal-check", "doublet"],
    ] {
        let mut argv = vec!["poisson-order", "--input", input];
        argv.extend(args);
        let out = execute(argv);
        print!("{}", out.stdout);
        eprint!("{}", out.stderr);
    }
    print!("{}", execute(["poisson-order", "q-specialize", "--n", "2", "--ell", "3", "--format", "json"]).stdout);
}
