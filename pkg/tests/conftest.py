import os
import sys

codedir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'code')
sys.path.append(codedir)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweeps (optimizer, large n, sup norms at large alpha)")
