fn main() { std::process::exit(opalg::cli::run()); }
