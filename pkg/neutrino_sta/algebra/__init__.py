"""Real Clifford algebra Cl(1,3) with signature (+,-,-,-)"""
