fn main() {
    std::process::exit(nevanlinna::cli::main());
}
