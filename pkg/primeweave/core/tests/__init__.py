#  Needed by py.test
