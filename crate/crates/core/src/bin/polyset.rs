fn main() {
    std::process::exit(polyset::cli::main())
}
