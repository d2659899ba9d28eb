"""Report persistence: JSON, CSV and spreadsheets"""
