import ast
import os

from django.test import SimpleTestCase

import polaronLab

PACKAGE_DIR = os.path.dirname(os.path.abspath(polaronLab.__file__))


def imported_modules(directory):
    '''
    :return: dict of file path to the absolute module names it imports
    '''
    package = 'polaronLab.' + os.path.relpath(directory, PACKAGE_DIR).replace(os.sep, '.')
    result = {}
    for root, _, files in os.walk(directory):
        for name in files:
            if not name.endswith('.py'):
                continue
            path = os.path.join(root, name)
            with open(path) as f:
                tree = ast.parse(f.read(), filename=path)
            names = set()
            for node in ast.walk(tree):
                if isinstance(node, ast.Import):
                    names.update(alias.name for alias in node.names)
                elif isinstance(node, ast.ImportFrom):
                    names.add(_resolve(node, path, directory, package))
            result[path] = names
    return result


def _resolve(node, path, directory, package):
    if node.level == 0:
        return node.module
    relative = os.path.relpath(os.path.dirname(path), directory)
    parts = package.split('.') + ([] if relative == '.' else relative.split(os.sep))
    base = parts[:len(parts) - node.level + 1]
    return '.'.join(base + ([node.module] if node.module else []))


def offending(modules, forbidden):
    return sorted((os.path.basename(path), name) for path, names in modules.items() for name in names
                  if any(name == prefix or name.startswith(prefix + '.') for prefix in forbidden))


class TestOracleIndependence(SimpleTestCase):
    FORBIDDEN = ['polaronLab.apps.modes', 'polaronLab.apps.energy', 'polaronLab.apps.profiles.services',
                 'polaronLab.apps.profiles.kernels', 'polaronLab.apps.cli']

    def test_no_closed_form_imports(self):
        modules = imported_modules(os.path.join(PACKAGE_DIR, 'apps', 'oracle'))
        self.assertTrue(modules)
        self.assertEqual(offending(modules, self.FORBIDDEN), [])


class TestThinCommandLine(SimpleTestCase):
    FORBIDDEN = ['scipy', 'polaronLab.apps.profiles.kernels', 'polaronLab.apps.energy.kernels',
                 'polaronLab.apps.oracle.solver', 'polaronLab.apps.oracle.quadrature',
                 'polaronLab.apps.oracle.functional', 'polaronLab.helper_apps.specfun.functions']

    def test_public_surface_only(self):
        modules = imported_modules(os.path.join(PACKAGE_DIR, 'apps', 'cli'))
        self.assertTrue(modules)
        self.assertEqual(offending(modules, self.FORBIDDEN), [])

    def test_relative_imports_resolve(self):
        modules = imported_modules(os.path.join(PACKAGE_DIR, 'apps', 'cli'))
        verification = [names for path, names in modules.items() if path.endswith('verification.py')][0]
        self.assertIn('polaronLab.apps.cli.sweep', verification)
