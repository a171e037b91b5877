"""glorder: GL orders on projective space, tilting bundles, quivers and regrading"""
