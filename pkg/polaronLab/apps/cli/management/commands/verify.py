from django.conf import settings
from django.core.management.base import CommandError

from polaronLab.apps.cli.command import PolaronCommand, EXIT_CONFIG, EXIT_VERIFICATION
from polaronLab.apps.cli.verification import VerificationSuite, VerificationLevel, CheckStatus


class Command(PolaronCommand):
    help = "Checks every closed form against the numerical oracle"

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--level', choices=VerificationLevel.values(),
                            default=VerificationLevel.QUICK.value)
        parser.add_argument('--tamper', action='store_true', help="perturb the closed forms (DEBUG only)")

    def run(self, params, drive, **options):
        if options['tamper'] and not settings.DEBUG:
            raise CommandError("--tamper is only available with DEBUG settings.", returncode=EXIT_CONFIG)
        checks = VerificationSuite(params, drive, options['level'], tamper=options['tamper']).run()
        self.stdout.write("{:<36} {:>9} {:>11}  {}".format('check', 'tolerance', 'measured', 'status'))
        self.write_lines(check.as_line() for check in checks)
        failed = [check for check in checks if check.failed]
        flagged = [check for check in checks if check.status is CheckStatus.FLAG]
        self.stdout.write("{} checks, {} failed, {} flagged".format(len(checks), len(failed), len(flagged)))
        if failed:
            raise CommandError("verification failed: " + ", ".join(check.name for check in failed),
                               returncode=EXIT_VERIFICATION)
