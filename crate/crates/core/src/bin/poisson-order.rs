fn main() {
    std::process::exit(poisson_order::cli::main());
}
