from dotenv import load_dotenv

# Load environment variables from .env file (must be before other imports)
load_dotenv()

# Now import everything else
import logging  # noqa: E402
import sys  # noqa: E402
from config.settings import log_level, settings  # noqa: E402
from src.routes.cli import cli, run_cli  # noqa: E402

logging.basicConfig(
    level=log_level(settings),
    format=settings.logging.format,
    stream=sys.stderr,
)

__all__ = ["cli", "run_cli"]


if __name__ == "__main__":
    sys.exit(run_cli())
