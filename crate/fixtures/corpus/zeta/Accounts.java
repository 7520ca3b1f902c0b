package fixtures.zeta;

import java.util.HashMap;
import java.util.Map;

public class Accounts {

    private final Map<String, Long> balances = new HashMap<>();

    public long deposit(String owner, long amount) {
        assert amount > 0L;
        long current = balances.getOrDefault(owner, 0L);
        long next = current + amount;
        balances.put(owner, next);
        return next;
    }

    public boolean withdraw(String owner, long amount) {
        long current = balances.getOrDefault(owner, 0L);
        if (amount > current) {
            return false;
        }
        balances.put(owner, current - amount);
        return true;
    }

    public boolean overdrawn(String owner) {
        return balances.getOrDefault(owner, 0L) < 0L;
    }

    public long feeFor(long balance) {
        return balance < 1000L ? 5L : 0L;
    }

    public int richAccounts(long floor) {
        int count = 0;
        for (long balance : balances.values()) {
            if (balance >= floor) {
                count++;
            }
        }
        return count;
    }

    public long interest(long balance, int basisPoints) {
        long accrued = 0L;
        int day = 0;
        while (day < 365) {
            accrued += balance * basisPoints / 10000 / 365;
            day++;
        }
        return accrued;
    }

    public void auditAll(long threshold) {
        balances.forEach((owner, balance) -> flag(owner, balance > threshold));
    }

    private void flag(String owner, boolean big) {
        if (big && owner.length() > 0) {
            balances.put(owner, balances.get(owner));
        }
    }

    public String healthOf(long balance) {
        if (balance >= 10000L) {
            return "excellent";
        } else if (balance >= 1000L) {
            return "good";
        } else {
            return balance < 0L ? "overdrawn" : "low";
        }
    }

    public long retriesFor(long lagMillis) {
        long retries = 0L;
        do {
            lagMillis -= 250L;
            retries++;
        } while (lagMillis > 0L && retries < 8L);
        return retries;
    }
}
