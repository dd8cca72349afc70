"""Price/volume file ingestion."""
