"""Command-line surface: expression grammar, elaboration, catalog and commands."""
