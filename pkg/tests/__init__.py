# Tests for triadlab
