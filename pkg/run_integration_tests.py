#!/usr/bin/env python3
"""
Master test runner for the modular learning test suites
Provides options to run individual suites or all of them
"""

import subprocess
import sys
from datetime import datetime
import click


class TestRunner:
    def __init__(self):
        self.test_files = {
            "core": {
                "file": "test_core.py",
                "description": "Query vocabulary, honest oracle and session driver",
            },
            "concepts": {
                "file": "test_concepts.py",
                "description": "Concept classes, composites and concept syntax",
            },
            "learners": {
                "file": "test_composite_learners.py",
                "description": "Product, union, elimination and prefix learners",
            },
            "adversary": {
                "file": "test_adversary.py",
                "description": "Adversarial oracles and lower-bound constructions",
            },
            "pac": {
                "file": "test_pac.py",
                "description": "PAC bounds, subconcept search and seeded trials",
            },
            "cli": {
                "file": "test_cli.py",
                "description": "modlearn commands and report rendering",
            },
        }

    def print_header(self, title: str):
        """Print formatted header"""
        click.echo("\n" + "=" * 70)
        click.echo(f"  {title}")
        click.echo("=" * 70)

    def run_test_file(self, test_key: str, extra: tuple = ()) -> bool:
        """Run a specific test file under pytest"""
        test_info = self.test_files.get(test_key)
        if not test_info:
            click.echo(f"❌ Unknown test key: {test_key}")
            return False

        self.print_header(f"Running {test_info['description']}")
        click.echo(f"📝 Test file: {test_info['file']}")
        click.echo(f"🕐 Started at: {datetime.now().strftime('%H:%M:%S')}")
        click.echo("-" * 70)

        try:
            result = subprocess.run([sys.executable, "-m", "pytest", test_info["file"], *extra])
        except OSError as e:
            click.echo(f"❌ Error running test: {e}")
            return False

        if result.returncode == 0:
            click.echo(f"\n✅ {test_info['description']} completed successfully")
            return True
        click.echo(f"\n❌ {test_info['description']} failed with code: {result.returncode}")
        return False

    def run_all_tests(self, extra: tuple = ()) -> bool:
        """Run all test suites in sequence"""
        self.print_header("Running All Test Suites")

        results = {key: self.run_test_file(key, extra) for key in self.test_files}

        self.print_header("Final Test Summary")
        for test_key, test_info in self.test_files.items():
            status = "✅ PASS" if results[test_key] else "❌ FAIL"
            click.echo(f"{status} - {test_info['description']}")

        all_passed = all(results.values())
        click.echo("\n" + "=" * 70)
        if all_passed:
            click.echo("🎉 All tests passed successfully!")
        else:
            failed_count = sum(1 for v in results.values() if not v)
            click.echo(f"⚠️  {failed_count} test suite(s) failed")
        click.echo("=" * 70)
        return all_passed


@click.command()
@click.option(
    "--test",
    "suite",
    type=click.Choice(["core", "concepts", "learners", "adversary", "pac", "cli", "all"]),
    default="all",
    show_default=True,
    help="Run specific test suite",
)
@click.option("--quiet", "-q", is_flag=True, help="Pass -q to pytest")
def main(suite: str, quiet: bool):
    """Run the test suites one file at a time."""
    runner = TestRunner()
    extra = ("-q",) if quiet else ()
    success = runner.run_all_tests(extra) if suite == "all" else runner.run_test_file(suite, extra)
    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
