"""curvecones: exact finite-field verification of quartic and cubic
hypersurfaces through canonical curves of genus 4 and 5."""

__version__ = "0.1.0"
