fn main() {
    std::process::exit(ckforms::cli::main());
}
