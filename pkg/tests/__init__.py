# Tests for prio-wfs
