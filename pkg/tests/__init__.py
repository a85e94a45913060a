# Tests for the budgetnet toolkit
