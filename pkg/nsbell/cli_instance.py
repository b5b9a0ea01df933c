import typer

# Create the Typer application shared by all feature commands
app = typer.Typer(
    name="nsbell",
    help="Reproducible batch experiments for noiseless-subsystem Bell tests. Every command writes a CSV file.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

from log_config import set_verbose


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log per-call details at DEBUG level."),
):
    """Noiseless-subsystem Bell test simulator."""
    set_verbose(verbose)
