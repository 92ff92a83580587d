import os
import sys
import inspect
import subprocess

# Paths
REPOSITORY_PATH = os.path.abspath(os.path.dirname(sys.argv[0]))
MANAGE = os.path.join(REPOSITORY_PATH, 'manage.py')

# Color constant to console print
HEADER = '\033[95m'
OKBLUE = '\033[94m'
OKGREEN = '\033[92m'
FAIL = '\033[91m'
ENDC = '\033[0m'

PREFIX = '_Checks__command_'


class Checks:
    """
    Runs the checks of the repository one after the other and stops at
    the first one that fails.
    """

    def __init__(self):
        self.commands = sorted(
            name[len(PREFIX):] for name, _ in inspect.getmembers(self)
            if name.startswith(PREFIX)
        )

    def help(self):
        print('Usage: tests [command [command]]')
        print('Example: tests coverage style')
        print()
        print('Commands:')
        for command in self.commands:
            print(" |-" + command)

    def launch_commands(self, names):
        for name in names:
            if name not in self.commands:
                raise ValueError('`' + name + '` is not a valid command name.')
            title, description, lines = getattr(self, PREFIX + name)()
            if not self.__execute(title, description, lines):
                print(FAIL + "FAILED -- " + title + "." + ENDC)
                return 1
        print(OKGREEN + "OK - Checks successful." + ENDC)
        return 0

    @staticmethod
    def __execute(title, description, lines):
        message = "Running -- " + title + "..."
        print(OKGREEN + "-" * len(message) + ENDC)
        print(OKGREEN + message + ENDC)
        print(OKBLUE + description + ENDC)
        for line in lines:
            print(HEADER + line + ENDC)
            if subprocess.call(line, shell=True, cwd=REPOSITORY_PATH):
                return False
        return True

    @staticmethod
    def __command_coverage():
        """
        Unit, command and API tests under coverage.
        """
        title = "Tests and Coverage"
        description = "Runs the test suite of spider_ekr."
        test = "coverage run --source=spider_ekr " + MANAGE + " test"
        return title, description, [test, "coverage report"]

    @staticmethod
    def __command_style():
        """
        Pycodestyle over the repository.
        """
        title = "Pycodestyle"
        description = "Output will be empty if there are no styling errors."
        return title, description, [
            "pycodestyle --config=.pycodestylerc spider_ekr tests.py "
            "manage.py"
        ]

    @staticmethod
    def __command_acceptance():
        """
        Catalog sweeps of the star counts and of the three maps.
        """
        title = "Catalog sweeps"
        description = "Spiders up to 14 vertices, 16 for the leaf flips."
        return title, description, [
            "SPIDER_EKR_SWEEP_MAX_N=14 python " + MANAGE +
            " test spider_ekr.tests.tests_acceptance_Sweep"
        ]

    @staticmethod
    def __command_scan():
        """
        The conjecture-range scan over every spider up to 12 vertices.
        """
        title = "Conjecture-range scan"
        description = "Takes a few minutes. REPORTABLE lines are findings."
        return title, description, [
            "python " + MANAGE + " scan --max-n 12 --workers 4"
        ]


if __name__ == "__main__":
    checks = Checks()

    if len(sys.argv) > 1 and sys.argv[1] in ['help', '-h', '--help']:
        checks.help()
    else:
        sys.exit(checks.launch_commands(sys.argv[1:] or ['coverage',
                                                         'style']))
