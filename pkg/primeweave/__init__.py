# primeweave is a namespace package, see setup.py
from pkgutil import extend_path
__path__ = extend_path(__path__, __name__)
