fn main() -> std::process::ExitCode {
    orepoly::cli::main()
}
