"""
Click commands of the experiment harness.
"""
