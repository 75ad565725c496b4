fn main() -> std::process::ExitCode {
    toric::cli::main()
}
