"""Identity suite orchestration"""
