fn main() {
    std::process::exit(kelpbed::cli::main());
}
