#!/usr/bin/env python
import os
import sys
import pytest
import coverage

if __name__ == '__main__':
    # Environment variables
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'polaronLab.settings.local')

    measure_coverage = True
    if '--no-cov' in sys.argv:
        measure_coverage = False
        sys.argv.remove('--no-cov')

    skip_slow = '--fast' in sys.argv
    if skip_slow:
        sys.argv.remove('--fast')

    # Start coverage tracking
    if measure_coverage:
        cov = coverage.coverage(source=['polaronLab'])
        cov.start()

    # Run pytest
    if len(sys.argv) > 1:
        arguments = sys.argv[1:]
    else:
        arguments = ['polaronLab/apps', 'polaronLab/helper_apps', 'polaronLab/tests/tests']
    if skip_slow:
        arguments += ['-m', 'not slow']
    code = pytest.main(arguments)

    # Show coverage report
    if measure_coverage:
        cov.stop()
        cov.save()
        cov.report()

    sys.exit(code)
